#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/cnf.hpp"
#include "pexlab/decisions.hpp"
#include "pexlab/semantics.hpp"

namespace pexlab {

// Augments Phi with two fresh variables: each clause C_i becomes
// (C_i v -x_{n+1} v x_{n+2}) and (C_i v x_{n+1} v -x_{n+2}).
inline CnfFormula build_psi(const CnfFormula& phi) {
    CnfFormula psi;
    psi.var_count = phi.var_count + 2;
    psi.width_three = false;
    int xa = phi.var_count + 1, xb = phi.var_count + 2;
    for (const auto& c : phi.clauses) {
        std::vector<int> first = c, second = c;
        first.push_back(-xa);
        first.push_back(xb);
        second.push_back(xa);
        second.push_back(-xb);
        psi.clauses.push_back(std::move(first));
        psi.clauses.push_back(std::move(second));
    }
    return psi;
}

struct PsiProperties {
    bool every_var_somewhere_true = false;   // (a)
    bool every_var_somewhere_false = false;  // (b)
    bool has_separating_assignment = false;  // exists sat assignment with x_{n+1}=T, x_{n+2}=F
    bool phi_satisfiable = false;
    bool separation_matches_sat = false;     // (c)

    bool pass() const {
        return every_var_somewhere_true && every_var_somewhere_false && separation_matches_sat;
    }
};

// Brute-force check of the three structural properties of Psi.
inline PsiProperties check_psi_properties(const CnfFormula& phi) {
    if (phi.var_count + 2 > kSatCap)
        throw CapExceeded("psi property check capped at " + std::to_string(kSatCap - 2) +
                          " base variables");
    CnfFormula psi = build_psi(phi);
    int n = psi.var_count;
    std::uint64_t seen_true = 0, seen_false = 0;
    bool separating = false;
    std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        Assignment a{bits, n};
        if (!formula_satisfied(psi, a)) continue;
        seen_true |= bits;
        seen_false |= ~bits & low_mask(n);
        if (a.value(n - 1) && !a.value(n)) separating = true;
    }
    PsiProperties out;
    out.every_var_somewhere_true = seen_true == low_mask(n);
    out.every_var_somewhere_false = seen_false == low_mask(n);
    out.has_separating_assignment = separating;
    out.phi_satisfiable = brute_sat(phi).has_value();
    out.separation_matches_sat = out.has_separating_assignment == out.phi_satisfiable;
    return out;
}

struct GadgetOptions {
    // Reverse every attack pair (the reading of Definition 1's naming
    // sentence). Breaks the construction; kept for the falsification harness.
    bool reversed = false;
    // Drop the chi -> C_j^(k) attacks, leaving only the seven basic attack
    // groups. In that variant {x_{n+1}, x-bar_{n+2}, C_j^(1), chi} is
    // admissible for every formula, so the query is never preferred and chi
    // and the clause arguments become credulously accepted; the repair is
    // what makes the advertised biconditional hold.
    bool naive_gadget = false;
};

// The argument system built from Psi, together with the query set and the
// claimed credulous-acceptance vector.
struct ReductionInstance {
    ArgumentSystem system;
    ArgSet query;             // {x_{n+1}, x-bar_{n+2}}
    AcceptanceVector alpha;   // claimed pattern, not computed
    int var_count = 0;        // n of the source formula
    int clause_count = 0;

    static constexpr int psi_index = 0;
    static constexpr int chi_index = 1;
    // x_i / x-bar_i for 1 <= i <= var_count + 2
    int pos_index(int i) const { return 2 + 2 * (i - 1); }
    int neg_index(int i) const { return 3 + 2 * (i - 1); }
    // C_j^(k) for 1 <= j <= clause_count, k in {1,2}
    int clause_index(int j, int k) const {
        return 2 + 2 * (var_count + 2) + 2 * (j - 1) + (k - 1);
    }
};

// Builds H_Psi with arguments PSI, CHI, p<i>/n<i> for the literals, and
// c<j>_1/c<j>_2 for the doubled clauses. Attacks are attacker-first.
inline ReductionInstance build_h_psi(const CnfFormula& phi, const GadgetOptions& opts = {}) {
    int n = phi.var_count, m = phi.clause_count();
    int total = 2 * (m + n + 3);
    if (total > kMaxArgs)
        throw CapExceeded("reduction instance needs " + std::to_string(total) +
                          " arguments, engine cap is 64");
    ReductionInstance inst;
    inst.var_count = n;
    inst.clause_count = m;

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(total));
    names.emplace_back("PSI");
    names.emplace_back("CHI");
    for (int i = 1; i <= n + 2; ++i) {
        names.push_back("p" + std::to_string(i));
        names.push_back("n" + std::to_string(i));
    }
    for (int j = 1; j <= m; ++j) {
        names.push_back("c" + std::to_string(j) + "_1");
        names.push_back("c" + std::to_string(j) + "_2");
    }

    std::vector<std::pair<int, int>> attacks;
    auto add = [&](int a, int b) {
        if (opts.reversed)
            attacks.emplace_back(b, a);
        else
            attacks.emplace_back(a, b);
    };
    const int psi = ReductionInstance::psi_index;
    const int chi = ReductionInstance::chi_index;
    // (1) literal pairs attack each other
    for (int i = 1; i <= n + 2; ++i) {
        add(inst.pos_index(i), inst.neg_index(i));
        add(inst.neg_index(i), inst.pos_index(i));
    }
    // (2) chi attacks the base literals
    for (int i = 1; i <= n; ++i) {
        add(chi, inst.pos_index(i));
        add(chi, inst.neg_index(i));
    }
    for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= 2; ++k) {
            int cjk = inst.clause_index(j, k);
            // (3) each literal occurrence attacks its clause arguments
            for (int lit : phi.clauses[static_cast<std::size_t>(j - 1)]) {
                int v = lit > 0 ? lit : -lit;
                add(lit > 0 ? inst.pos_index(v) : inst.neg_index(v), cjk);
            }
            // (4) clause arguments attack PSI
            add(cjk, psi);
            // chi also attacks the clause arguments. Without this no
            // admissible set is forced through PSI, and the query stops
            // being preferred for unsatisfiable formulas (see GadgetOptions).
            if (!opts.naive_gadget) add(chi, cjk);
        }
        // (5)/(6) the fresh literals attack the clause copies crosswise
        add(inst.neg_index(n + 1), inst.clause_index(j, 1));
        add(inst.pos_index(n + 2), inst.clause_index(j, 1));
        add(inst.pos_index(n + 1), inst.clause_index(j, 2));
        add(inst.neg_index(n + 2), inst.clause_index(j, 2));
    }
    // (7) PSI attacks chi
    add(psi, chi);

    inst.system = ArgumentSystem(std::move(names), attacks);

    std::uint64_t q = (std::uint64_t{1} << inst.pos_index(n + 1)) |
                      (std::uint64_t{1} << inst.neg_index(n + 2));
    inst.query = inst.system.set_of(q);

    std::uint64_t accepted = std::uint64_t{1} << psi;
    for (int i = 1; i <= n + 2; ++i) {
        accepted |= std::uint64_t{1} << inst.pos_index(i);
        accepted |= std::uint64_t{1} << inst.neg_index(i);
    }
    inst.alpha = AcceptanceVector{accepted, inst.system.n()};
    return inst;
}

// Duplicate-free attack count of the shipped gadget. The seven basic groups
// alone give 4n+12m+5; the chi->C repair adds 2m.
inline int expected_attack_count(int n, int m, bool naive_gadget = false) {
    return 4 * n + (naive_gadget ? 12 : 14) * m + 5;
}

// S_alpha: the extension induced by an assignment of the base variables,
// {x_{n+1}, x-bar_{n+2}, PSI} plus one literal argument per variable.
inline ArgSet induced_extension(const ReductionInstance& inst, const Assignment& a) {
    if (a.var_count != inst.var_count)
        throw WidthMismatch("assignment covers " + std::to_string(a.var_count) +
                            " variables, reduction has " + std::to_string(inst.var_count));
    std::uint64_t bits = inst.query.bits | (std::uint64_t{1} << ReductionInstance::psi_index);
    for (int i = 1; i <= inst.var_count; ++i)
        bits |= std::uint64_t{1} << (a.value(i) ? inst.pos_index(i) : inst.neg_index(i));
    return inst.system.set_of(bits);
}

struct ReductionReport {
    bool sat = false;       // brute_sat found an assignment
    bool pref = false;      // query in PE(H_Psi)
    bool stab = false;      // query expandable to a stable extension
    bool alpha_ok = false;  // compute_alpha matches the claimed pattern
    bool induced_preferred = false;  // sat => S_alpha in PE(H_Psi)
    bool pass = false;
    int args = 0;
    int attacks = 0;
};

// Runs the whole pipeline for one formula and checks the advertised
// biconditionals: sat <=> query not preferred, sat <=> query stable-expandable.
inline ReductionReport verify_reduction(const CnfFormula& phi, const GadgetOptions& opts = {}) {
    ReductionInstance inst = build_h_psi(phi, opts);
    ReductionReport r;
    r.args = inst.system.n();
    r.attacks = inst.system.attack_count();
    auto assignment = brute_sat(phi);
    r.sat = assignment.has_value();
    r.pref = decide_pref_ext(inst.system, inst.query);
    r.stab = decide_stab_ext(inst.system, inst.query);
    r.alpha_ok = validate_alpha(inst.system, inst.alpha);
    r.induced_preferred =
        !r.sat || decide_pref_ext(inst.system, induced_extension(inst, *assignment));
    r.pass = (r.pref == !r.sat) && (r.stab == r.sat) && r.alpha_ok && r.induced_preferred;
    return r;
}

// One instance per line, stable field order.
inline std::string report_line(const std::string& label, const ReductionReport& r) {
    std::ostringstream out;
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "instance=" << label << " args=" << r.args << " attacks=" << r.attacks
        << " sat=" << b(r.sat) << " pref=" << b(r.pref) << " stab=" << b(r.stab)
        << " alpha_ok=" << b(r.alpha_ok) << " induced_pref=" << b(r.induced_preferred)
        << " pass=" << b(r.pass);
    return out.str();
}

// Seeded corpus runner; reports are indexed by instance so multi-threaded
// runs come out identical.
inline std::vector<ReductionReport> verify_corpus(int count, int max_vars, int max_clauses,
                                                  std::uint64_t seed, const GadgetOptions& opts = {},
                                                  int threads = 1) {
    std::vector<CnfFormula> formulas;
    formulas.reserve(static_cast<std::size_t>(count));
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) formulas.push_back(random_3cnf(max_vars, max_clauses, rng));
    std::vector<ReductionReport> reports(static_cast<std::size_t>(count));
    parallel_chunks(static_cast<std::uint64_t>(count), threads,
                    [&](std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t i = begin; i < end; ++i)
                            reports[i] = verify_reduction(formulas[i], opts);
                    });
    return reports;
}

}  // namespace pexlab
