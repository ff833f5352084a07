#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/semantics.hpp"

namespace pexlab {

inline constexpr int kMinFormulaVarCap = 4;  // DP over 2^(2^n) function space
inline constexpr int kLofNCap = 3;           // exhaustive over 2^(n(n-1)) systems
inline constexpr int kDefaultLiteralCap = 16;

// Negation-normal-form formula over {and, or} with signed-variable leaves.
// Length is the total number of literal occurrences. The two constants only
// arise as empty-disjunction / empty-conjunction conventions.
struct Formula {
    enum class Kind : std::uint8_t { const_false, const_true, leaf, and_node, or_node };

    struct Node {
        Kind kind;
        int var = 0;  // 1-based, leaf only
        bool negated = false;
        int left = -1;
        int right = -1;
    };

    std::vector<Node> nodes;
    int root = -1;

    static Formula constant(bool value) {
        Formula f;
        f.nodes.push_back({value ? Kind::const_true : Kind::const_false});
        f.root = 0;
        return f;
    }

    static Formula leaf(int var, bool negated) {
        Formula f;
        f.nodes.push_back({Kind::leaf, var, negated});
        f.root = 0;
        return f;
    }

    static Formula combine(Kind kind, Formula a, Formula b) {
        Formula f = std::move(a);
        int offset = static_cast<int>(f.nodes.size());
        int left = f.root;
        for (auto node : b.nodes) {
            if (node.left >= 0) node.left += offset;
            if (node.right >= 0) node.right += offset;
            f.nodes.push_back(node);
        }
        int right = b.root + offset;
        f.nodes.push_back({kind, 0, false, left, right});
        f.root = static_cast<int>(f.nodes.size()) - 1;
        return f;
    }

    static Formula conj(Formula a, Formula b) { return combine(Kind::and_node, std::move(a), std::move(b)); }
    static Formula disj(Formula a, Formula b) { return combine(Kind::or_node, std::move(a), std::move(b)); }

    int literal_count() const {
        int total = 0;
        for (const auto& n : nodes)
            if (n.kind == Kind::leaf) ++total;
        return total;
    }

    // assignment bit v-1 holds x_v
    bool evaluate(std::uint64_t assignment) const {
        return eval_node(root, assignment);
    }

    std::string to_string() const { return node_string(root); }

private:
    bool eval_node(int ix, std::uint64_t assignment) const {
        const Node& n = nodes[static_cast<std::size_t>(ix)];
        switch (n.kind) {
            case Kind::const_false: return false;
            case Kind::const_true: return true;
            case Kind::leaf: {
                bool v = (assignment >> (n.var - 1)) & 1;
                return n.negated ? !v : v;
            }
            case Kind::and_node: return eval_node(n.left, assignment) && eval_node(n.right, assignment);
            case Kind::or_node: return eval_node(n.left, assignment) || eval_node(n.right, assignment);
        }
        return false;
    }

    std::string node_string(int ix) const {
        const Node& n = nodes[static_cast<std::size_t>(ix)];
        switch (n.kind) {
            case Kind::const_false: return "false";
            case Kind::const_true: return "true";
            case Kind::leaf:
                return (n.negated ? "~x" : "x") + std::to_string(n.var);
            case Kind::and_node:
                return "(" + node_string(n.left) + " & " + node_string(n.right) + ")";
            case Kind::or_node:
                return "(" + node_string(n.left) + " | " + node_string(n.right) + ")";
        }
        return "?";
    }
};

// Full-minterm DNF of an extension family: one conjunction per member, every
// variable present and signed by membership. Literal count is n * |family|.
inline Formula dnf_formula(const ArgumentSystem& h, Semantics semantics,
                           const SearchLimits& limits = {}) {
    ExtensionFamily family = semantics == Semantics::stable ? enumerate_stable(h, limits)
                                                            : enumerate_preferred(h, limits);
    if (family.empty()) return Formula::constant(false);
    if (h.n() == 0) return Formula::constant(true);  // single member: the empty conjunction
    std::optional<Formula> result;
    for (const auto& member : family.members) {
        std::optional<Formula> minterm;
        for (int j = 1; j <= h.n(); ++j) {
            Formula lit = Formula::leaf(j, !member.contains(j - 1));
            minterm = minterm ? Formula::conj(std::move(*minterm), std::move(lit)) : std::move(lit);
        }
        result = result ? Formula::disj(std::move(*result), std::move(*minterm)) : std::move(minterm);
    }
    return *result;
}

struct MinFormulaResult {
    std::optional<int> length;
    bool cap_hit = false;  // length empty because the literal cap ran out
};

// Exact minimal literal count of a formula over {and, or, not} computing the
// given truth table (bit i = value at assignment i, variable x_j contributes
// 2^(j-1) to the index). Dynamic programming over function classes:
// F_1 = signed literals, F_k closed under g&h, g|h with sizes summing to k.
// De Morgan push-down makes leaf-literal NNF counting exact for this basis.
//
// Constant tables are reported "not representable"; that is a fixed
// reporting convention for empty families, not a fact about the basis,
// which does reach them (x1 & ~x1).
inline MinFormulaResult min_formula_length(std::uint32_t table, int n,
                                           int literal_cap = kDefaultLiteralCap) {
    if (n < 1 || n > kMinFormulaVarCap)
        throw CapExceeded("minimal-formula DP capped at 1 <= n <= " +
                          std::to_string(kMinFormulaVarCap));
    int points = 1 << n;
    std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << points) - 1);
    if (table & ~full) throw Error("truth table has bits beyond 2^n");
    if (table == 0 || table == full) return {std::nullopt, false};

    std::vector<std::uint8_t> best(std::uint64_t{1} << points, 0);
    std::vector<std::vector<std::uint32_t>> levels(static_cast<std::size_t>(literal_cap) + 1);
    for (int j = 1; j <= n; ++j) {
        std::uint32_t pattern = 0;
        for (int idx = 0; idx < points; ++idx)
            if ((idx >> (j - 1)) & 1) pattern |= std::uint32_t{1} << idx;
        for (std::uint32_t f : {pattern, pattern ^ full}) {
            if (!best[f]) {
                best[f] = 1;
                levels[1].push_back(f);
            }
        }
    }
    if (best[table] == 1) return {1, false};

    for (int k = 2; k <= literal_cap; ++k) {
        for (int i = 1; i + i <= k; ++i) {
            for (std::uint32_t g : levels[static_cast<std::size_t>(i)]) {
                for (std::uint32_t h : levels[static_cast<std::size_t>(k - i)]) {
                    for (std::uint32_t f : {g & h, g | h}) {
                        if (!best[f]) {
                            best[f] = static_cast<std::uint8_t>(k);
                            levels[static_cast<std::size_t>(k)].push_back(f);
                        }
                    }
                }
            }
        }
        if (best[table]) return {k, false};
    }
    return {std::nullopt, true};
}

// Truth table of the preferred-extension indicator function f_H.
inline std::uint32_t preferred_truth_table(const ArgumentSystem& h) {
    if (h.n() > 5) throw CapExceeded("truth tables as machine words need n <= 5");
    ExtensionFamily pe = oracle_extensions(h, Semantics::preferred);
    std::uint32_t table = 0;
    for (const auto& m : pe.members) table |= std::uint32_t{1} << m.bits;
    return table;
}

// L(n): the worst minimal formula length over every n-argument system,
// computed exhaustively over all 2^(n(n-1)) attack relations.
inline int compute_L_of_n(int n, int literal_cap = 2 * kDefaultLiteralCap) {
    if (n < 1 || n > kLofNCap)
        throw CapExceeded("L(n) exhaustive scan capped at 1 <= n <= " + std::to_string(kLofNCap));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));

    std::set<std::uint32_t> tables;
    std::uint64_t relations = std::uint64_t{1} << pairs.size();
    for (std::uint64_t rel = 0; rel < relations; ++rel) {
        std::vector<std::pair<int, int>> attacks;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((rel >> b) & 1) attacks.push_back(pairs[b]);
        tables.insert(preferred_truth_table(ArgumentSystem(names, attacks)));
    }
    int worst = 0;
    for (auto t : tables) {
        auto r = min_formula_length(t, n, literal_cap);
        if (!r.length)
            throw Error("L(n) scan hit the literal cap; raise it");
        if (*r.length > worst) worst = *r.length;
    }
    return worst;
}

}  // namespace pexlab
