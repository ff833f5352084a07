#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/bits.hpp"
#include "pexlab/errors.hpp"

namespace pexlab {

// Optional resource limit for the exponential searches. 0 = unlimited.
// Exceeding the budget throws BudgetExceeded; it never yields a wrong answer.
struct SearchLimits {
    std::uint64_t node_budget = 0;
};

inline constexpr int kOracleCap = 22;  // 2^n subset scan

namespace detail {

// Keeps the subset-maximal elements of a list of masks.
inline std::vector<std::uint64_t> maximal_elements(std::vector<std::uint64_t> sets) {
    // Process in descending popcount so a set can only be dominated by one
    // already kept.
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::vector<std::uint64_t> kept;
    for (auto m : sets) {
        bool dominated = false;
        for (auto k : kept)
            if ((m & ~k) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(m);
    }
    return kept;
}

// DFS over all conflict-free sets. visit(set, attacking, attacked) is called
// once per conflict-free set; returning false prunes the subtree below it.
template <class Visit>
void for_each_conflict_free(const ArgumentSystem& h, NodeCounter& nc, Visit&& visit) {
    int n = h.n();
    auto rec = [&](auto&& self, std::uint64_t set, std::uint64_t att, std::uint64_t tgt,
                   int next) -> void {
        nc.tick();
        if (!visit(set, att, tgt, next)) return;
        for (int j = next; j < n; ++j) {
            std::uint64_t b = std::uint64_t{1} << j;
            if ((att | tgt) & b) continue;  // j conflicts with the current set
            self(self, set | b, att | h.attackers_of(j), tgt | h.targets_of(j), j + 1);
        }
    };
    rec(rec, 0, 0, 0, 0);
}

inline std::vector<std::uint64_t> admissible_masks_search(const ArgumentSystem& h,
                                                          const SearchLimits& limits) {
    NodeCounter nc{limits.node_budget};
    std::vector<std::uint64_t> out;
    for_each_conflict_free(h, nc, [&](std::uint64_t set, std::uint64_t att, std::uint64_t tgt, int) {
        if ((att & ~tgt) == 0) out.push_back(set);
        return true;
    });
    return out;
}

inline std::vector<std::uint64_t> stable_masks_search(const ArgumentSystem& h,
                                                      const SearchLimits& limits) {
    NodeCounter nc{limits.node_budget};
    std::uint64_t full = h.full_mask();
    std::vector<std::uint64_t> out;
    for_each_conflict_free(h, nc, [&](std::uint64_t set, std::uint64_t, std::uint64_t tgt, int next) {
        if ((set | tgt) == full) out.push_back(set);
        // Arguments already passed over must be attackable by a future member.
        std::uint64_t dead = ~(set | tgt) & low_mask(next);
        std::uint64_t future = full & ~low_mask(next);
        while (dead) {
            int u = std::countr_zero(dead);
            dead &= dead - 1;
            if ((h.attackers_of(u) & future) == 0) return false;
        }
        return true;
    });
    return out;
}

// Completes s0 (conflict-free) to an admissible superset if one exists.
// Branches on the defenders of the lowest undefended attacker; complete
// because any admissible T >= s0 supplies a defender in every branch level.
inline std::optional<std::uint64_t> complete_to_admissible(const ArgumentSystem& h,
                                                           std::uint64_t s0) {
    if (!conflict_free_mask(h, s0)) return std::nullopt;
    auto rec = [&](auto&& self, std::uint64_t set, std::uint64_t att,
                   std::uint64_t tgt) -> std::optional<std::uint64_t> {
        std::uint64_t undefended = att & ~tgt;
        if (undefended == 0) return set;
        int y = std::countr_zero(undefended);
        std::uint64_t defenders = h.attackers_of(y) & ~(att | tgt | set);
        while (defenders) {
            int z = std::countr_zero(defenders);
            defenders &= defenders - 1;
            auto r = self(self, set | (std::uint64_t{1} << z), att | h.attackers_of(z),
                          tgt | h.targets_of(z));
            if (r) return r;
        }
        return std::nullopt;
    };
    return rec(rec, s0, attacking(h, s0), attacked_by(h, s0));
}

}  // namespace detail

// Exhaustive 2^n scan; the ground truth that every other procedure is tested
// against. Capped at n <= 22.
inline ExtensionFamily oracle_extensions(const ArgumentSystem& h, Semantics semantics) {
    if (h.n() > kOracleCap)
        throw CapExceeded("power-set oracle capped at n <= " + std::to_string(kOracleCap));
    std::uint64_t count = std::uint64_t{1} << h.n();
    std::vector<std::uint64_t> hits;
    for (std::uint64_t set = 0; set < count; ++set) {
        switch (semantics) {
            case Semantics::admissible:
                if (detail::admissible_mask(h, set)) hits.push_back(set);
                break;
            case Semantics::stable:
                if (detail::stable_mask(h, set)) hits.push_back(set);
                break;
            case Semantics::preferred:
                if (detail::admissible_mask(h, set)) hits.push_back(set);
                break;
        }
    }
    if (semantics == Semantics::preferred) hits = detail::maximal_elements(std::move(hits));
    return ExtensionFamily::from_masks(semantics, h.n(), std::move(hits));
}

// Search-based enumeration: DFS over conflict-free supersets, collecting
// admissible sets and keeping the subset-maximal ones.
inline ExtensionFamily enumerate_preferred(const ArgumentSystem& h, const SearchLimits& limits = {}) {
    auto adm = detail::admissible_masks_search(h, limits);
    return ExtensionFamily::from_masks(Semantics::preferred, h.n(),
                                       detail::maximal_elements(std::move(adm)));
}

inline ExtensionFamily enumerate_stable(const ArgumentSystem& h, const SearchLimits& limits = {}) {
    return ExtensionFamily::from_masks(Semantics::stable, h.n(),
                                       detail::stable_masks_search(h, limits));
}

// Maximality is decided by a complete admissible-superset search; stepwise
// single-argument tests are unsound (a superset can need several additions
// at once).
inline bool is_preferred(const ArgumentSystem& h, const ArgSet& s) {
    h.check_width(s);
    if (!detail::admissible_mask(h, s.bits)) return false;
    std::uint64_t conflicted = detail::attacking(h, s.bits) | detail::attacked_by(h, s.bits);
    std::uint64_t candidates = h.full_mask() & ~(s.bits | conflicted);
    while (candidates) {
        int w = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (detail::complete_to_admissible(h, s.bits | (std::uint64_t{1} << w))) return false;
    }
    return true;
}

// x is credulously accepted iff some admissible set contains it (every
// admissible set extends to a preferred one).
inline bool credulous(const ArgumentSystem& h, int x) {
    h.check_index(x);
    return detail::complete_to_admissible(h, std::uint64_t{1} << x).has_value();
}

inline bool sceptical(const ArgumentSystem& h, int x) {
    h.check_index(x);
    auto family = enumerate_preferred(h);
    for (const auto& m : family.members)
        if (!m.contains(x)) return false;
    return true;
}

inline bool is_coherent(const ArgumentSystem& h) {
    return enumerate_preferred(h).masks() == enumerate_stable(h).masks();
}

}  // namespace pexlab
