#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/semantics.hpp"

namespace pexlab {

// One boolean per argument, in argument order: bit i-1 says whether x_i is
// credulously accepted. Validity is a promise checked by validate_alpha, not
// a structural invariant.
struct AcceptanceVector {
    std::uint64_t bits = 0;
    int n = 0;

    AcceptanceVector() = default;
    AcceptanceVector(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {}

    bool value(int index) const { return (bits >> index) & 1; }
    bool all_false() const { return bits == 0; }

    friend bool operator==(const AcceptanceVector& a, const AcceptanceVector& b) = default;
};

inline void check_width(const ArgumentSystem& h, const AcceptanceVector& alpha) {
    if (alpha.n != h.n())
        throw WidthMismatch("acceptance vector width " + std::to_string(alpha.n) +
                            " does not match system width " + std::to_string(h.n()));
    if (alpha.bits & ~h.full_mask())
        throw WidthMismatch("acceptance vector has bits beyond position n-1");
}

// PREF-EXT: is S a preferred extension?
inline bool decide_pref_ext(const ArgumentSystem& h, const ArgSet& s) {
    return is_preferred(h, s);
}

// STAB-EXT witness search: DFS over in/out labelings in index order. "in"
// arguments stay pairwise conflict-free; an argument passed over must still
// be attackable by the current or a future "in" member.
inline std::optional<ArgSet> find_stable_superset(const ArgumentSystem& h, const ArgSet& s,
                                                  const SearchLimits& limits = {}) {
    h.check_width(s);
    if (!detail::conflict_free_mask(h, s.bits)) return std::nullopt;
    int n = h.n();
    std::uint64_t full = h.full_mask();
    detail::NodeCounter nc{limits.node_budget};
    auto rec = [&](auto&& self, int i, std::uint64_t in, std::uint64_t att,
                   std::uint64_t tgt) -> std::optional<std::uint64_t> {
        nc.tick();
        std::uint64_t future = full & ~low_mask(i);
        std::uint64_t uncovered = low_mask(i) & ~in & ~tgt;
        while (uncovered) {
            int u = std::countr_zero(uncovered);
            uncovered &= uncovered - 1;
            if ((h.attackers_of(u) & future) == 0) return std::nullopt;
        }
        if (i == n) return (in | tgt) == full ? std::optional<std::uint64_t>(in) : std::nullopt;
        std::uint64_t b = std::uint64_t{1} << i;
        bool can_in = ((att | tgt) & b) == 0;
        if (s.bits & b) {
            if (!can_in) return std::nullopt;
            return self(self, i + 1, in | b, att | h.attackers_of(i), tgt | h.targets_of(i));
        }
        if (can_in) {
            auto r = self(self, i + 1, in | b, att | h.attackers_of(i), tgt | h.targets_of(i));
            if (r) return r;
        }
        return self(self, i + 1, in, att, tgt);
    };
    auto r = rec(rec, 0, 0, 0, 0);
    if (!r) return std::nullopt;
    return h.set_of(*r);
}

// STAB-EXT: can S be expanded to a stable extension (T = S allowed)?
inline bool decide_stab_ext(const ArgumentSystem& h, const ArgSet& s,
                            const SearchLimits& limits = {}) {
    return find_stable_superset(h, s, limits).has_value();
}

inline AcceptanceVector compute_alpha(const ArgumentSystem& h) {
    std::uint64_t bits = 0;
    for (int i = 0; i < h.n(); ++i)
        if (credulous(h, i)) bits |= std::uint64_t{1} << i;
    return AcceptanceVector{bits, h.n()};
}

inline bool validate_alpha(const ArgumentSystem& h, const AcceptanceVector& alpha) {
    check_width(h, alpha);
    return alpha == compute_alpha(h);
}

enum class InfPath {
    empty_set_fast_path,           // S = {}: answer read off alpha alone
    no_stable_extension_fast_path, // alpha all-false, n >= 1: no stable extension
    member_not_credulous,          // some member of S has alpha bit false
    search,                        // fell back to the uninformed decision
};

inline const char* to_string(InfPath p) {
    switch (p) {
        case InfPath::empty_set_fast_path: return "empty-set-fast-path";
        case InfPath::no_stable_extension_fast_path: return "no-stable-extension-fast-path";
        case InfPath::member_not_credulous: return "member-not-credulous-fast-path";
        case InfPath::search: return "search";
    }
    return "?";
}

struct InfResult {
    bool answer = false;
    InfPath path = InfPath::search;
};

// PREF-EXT-INF. With trust=false the alpha promise is checked first and a
// violation throws InvalidAlpha instead of answering under a false promise.
// The member-not-credulous rejection is an added sound shortcut (members of
// preferred extensions are credulously accepted); only the empty-set path is
// the classic polynomial case. Benchmark comparisons should account for it.
inline InfResult decide_pref_ext_inf(const ArgumentSystem& h, const ArgSet& s,
                                     const AcceptanceVector& alpha, bool trust) {
    h.check_width(s);
    check_width(h, alpha);
    if (!trust && !validate_alpha(h, alpha))
        throw InvalidAlpha("acceptance vector does not match credulous acceptance");
    if (s.bits == 0) return {alpha.all_false(), InfPath::empty_set_fast_path};
    if (s.bits & ~alpha.bits) return {false, InfPath::member_not_credulous};
    return {decide_pref_ext(h, s), InfPath::search};
}

// STAB-EXT-INF.
inline InfResult decide_stab_ext_inf(const ArgumentSystem& h, const ArgSet& s,
                                     const AcceptanceVector& alpha, bool trust,
                                     const SearchLimits& limits = {}) {
    h.check_width(s);
    check_width(h, alpha);
    if (!trust && !validate_alpha(h, alpha))
        throw InvalidAlpha("acceptance vector does not match credulous acceptance");
    if (alpha.all_false() && h.n() >= 1)
        return {false, InfPath::no_stable_extension_fast_path};
    if (s.bits & ~alpha.bits) return {false, InfPath::member_not_credulous};
    return {decide_stab_ext(h, s, limits), InfPath::search};
}

// ---------------------------------------------------------------------------
// alpha file format: one "name=true|false" line per argument, sorted by name,
// exactly covering the system's arguments. '#' comments and blank lines are
// permitted on input.
// ---------------------------------------------------------------------------

inline void write_alpha(const ArgumentSystem& h, const AcceptanceVector& alpha, std::ostream& out) {
    check_width(h, alpha);
    std::vector<std::pair<std::string, bool>> rows;
    rows.reserve(static_cast<std::size_t>(h.n()));
    for (int i = 0; i < h.n(); ++i) rows.emplace_back(h.name(i), alpha.value(i));
    std::sort(rows.begin(), rows.end());
    for (const auto& [name, v] : rows) out << name << '=' << (v ? "true" : "false") << '\n';
}

inline AcceptanceVector read_alpha(const ArgumentSystem& h, std::istream& in) {
    std::uint64_t bits = 0;
    std::uint64_t seen = 0;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("alpha line " + std::to_string(ln) + ": expected name=true|false");
        std::string name = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto ix = h.index_of(name);
        if (!ix)
            throw ParseError("alpha line " + std::to_string(ln) + ": unknown argument '" + name +
                             "'");
        if (seen & (std::uint64_t{1} << *ix))
            throw ParseError("alpha line " + std::to_string(ln) + ": duplicate entry for '" + name +
                             "'");
        seen |= std::uint64_t{1} << *ix;
        if (value == "true")
            bits |= std::uint64_t{1} << *ix;
        else if (value != "false")
            throw ParseError("alpha line " + std::to_string(ln) + ": value must be true or false");
    }
    if (seen != h.full_mask())
        throw ParseError("alpha file does not cover every argument of the system");
    return AcceptanceVector{bits, h.n()};
}

}  // namespace pexlab
