#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pexlab/bits.hpp"
#include "pexlab/errors.hpp"

namespace pexlab {

inline constexpr int kSatCap = 24;  // brute-force assignment scan

// CNF over variables 1..var_count; literals are signed DIMACS-style ints.
// Parsed formulas are exactly width 3; build_psi emits width 5 and clears
// width_three to flag the relaxation.
struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;
    bool width_three = true;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

// Total assignment of x_1..x_var_count; bit i-1 holds x_i.
struct Assignment {
    std::uint32_t bits = 0;
    int var_count = 0;

    bool value(int var) const { return (bits >> (var - 1)) & 1; }
};

inline bool literal_satisfied(int lit, const Assignment& a) {
    bool v = a.value(lit > 0 ? lit : -lit);
    return lit > 0 ? v : !v;
}

inline bool clause_satisfied(const std::vector<int>& clause, const Assignment& a) {
    for (int lit : clause)
        if (literal_satisfied(lit, a)) return true;
    return false;
}

inline bool formula_satisfied(const CnfFormula& f, const Assignment& a) {
    for (const auto& c : f.clauses)
        if (!clause_satisfied(c, a)) return false;
    return true;
}

// Standard DIMACS cnf, restricted to width-3 clauses.
inline CnfFormula parse_dimacs(std::istream& in) {
    std::string line;
    CnfFormula f;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> current;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (have_header) throw ParseError("dimacs line " + std::to_string(ln) + ": second header");
            std::istringstream hs(line);
            std::string p, kind;
            if (!(hs >> p >> kind >> f.var_count >> declared_clauses) || kind != "cnf")
                throw ParseError("dimacs line " + std::to_string(ln) + ": malformed header");
            if (f.var_count < 1) throw ParseError("dimacs header: need at least one variable");
            if (declared_clauses < 1) throw ParseError("dimacs header: need at least one clause");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("dimacs line " + std::to_string(ln) + ": clause before header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw ParseError("dimacs line " + std::to_string(ln) + ": clause has width " +
                                     std::to_string(current.size()) + ", expected 3");
                f.clauses.push_back(current);
                current.clear();
            } else {
                int v = lit > 0 ? lit : -lit;
                if (v > f.var_count)
                    throw ParseError("dimacs line " + std::to_string(ln) + ": variable " +
                                     std::to_string(v) + " exceeds declared count");
                current.push_back(lit);
            }
        }
        if (!ls.eof()) throw ParseError("dimacs line " + std::to_string(ln) + ": unexpected token");
    }
    if (!have_header) throw ParseError("dimacs input has no header");
    if (!current.empty()) throw ParseError("dimacs input ends inside a clause (missing 0)");
    if (f.clause_count() != declared_clauses)
        throw ParseError("dimacs header declares " + std::to_string(declared_clauses) +
                         " clauses but " + std::to_string(f.clause_count()) + " were given");
    return f;
}

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.var_count << ' ' << f.clause_count() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

// First satisfying assignment in lexicographic order of the value tuple
// (x_1, ..., x_n) with false < true, or nullopt. Capped at 24 variables.
inline std::optional<Assignment> brute_sat(const CnfFormula& f) {
    if (f.var_count > kSatCap)
        throw CapExceeded("brute-force SAT capped at " + std::to_string(kSatCap) + " variables");
    int n = f.var_count;
    std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t v = 0; v < total; ++v) {
        Assignment a;
        a.var_count = n;
        for (int i = 1; i <= n; ++i)
            if ((v >> (n - i)) & 1) a.bits |= std::uint32_t{1} << (i - 1);
        if (formula_satisfied(f, a)) return a;
    }
    return std::nullopt;
}

// Random width-3 formula: var and clause counts drawn uniformly from
// [1, max], then per clause three (variable, sign) draws. Consumption order
// is fixed so corpora reproduce bit-identically.
inline CnfFormula random_3cnf(int max_vars, int max_clauses, SplitMix64& rng) {
    CnfFormula f;
    f.var_count = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_vars));
    int m = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_clauses));
    for (int j = 0; j < m; ++j) {
        std::vector<int> clause;
        for (int k = 0; k < 3; ++k) {
            int var = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(f.var_count));
            bool neg = rng.next() & 1;
            clause.push_back(neg ? -var : var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

}  // namespace pexlab
