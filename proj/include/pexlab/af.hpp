#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pexlab/bits.hpp"
#include "pexlab/errors.hpp"

namespace pexlab {

// A subset of the arguments of one system, as an n-bit characteristic vector.
// Bit j-1 is set iff argument x_j is a member. Width must equal the host
// system's n whenever the two are used together.
struct ArgSet {
    std::uint64_t bits = 0;
    int n = 0;

    ArgSet() = default;
    ArgSet(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {}

    bool contains(int index) const { return (bits >> index) & 1; }
    bool empty() const { return bits == 0; }
    int size() const { return popcount(bits); }

    friend bool operator==(const ArgSet& a, const ArgSet& b) = default;
};

enum class Semantics { preferred, stable, admissible };

inline const char* to_string(Semantics s) {
    switch (s) {
        case Semantics::preferred: return "preferred";
        case Semantics::stable: return "stable";
        case Semantics::admissible: return "admissible";
    }
    return "?";
}

inline std::optional<Semantics> semantics_from_string(const std::string& s) {
    if (s == "preferred") return Semantics::preferred;
    if (s == "stable") return Semantics::stable;
    if (s == "admissible") return Semantics::admissible;
    return std::nullopt;
}

// Finite argument system: named arguments plus an irreflexive attack relation.
// Attack pairs are (attacker, target) everywhere in this project; att(a,b)
// means "a attacks b".
class ArgumentSystem {
public:
    ArgumentSystem() = default;

    ArgumentSystem(std::vector<std::string> names, const std::vector<std::pair<int, int>>& attacks) {
        if (names.size() > static_cast<std::size_t>(kMaxArgs))
            throw CapExceeded("argument count " + std::to_string(names.size()) +
                              " exceeds the engine cap of 64");
        names_ = std::move(names);
        int n = static_cast<int>(names_.size());
        for (int i = 0; i < n; ++i) {
            validate_name(names_[static_cast<std::size_t>(i)]);
            auto [it, fresh] = index_.emplace(names_[static_cast<std::size_t>(i)], i);
            if (!fresh) throw Error("duplicate argument name '" + names_[static_cast<std::size_t>(i)] + "'");
        }
        attackers_.assign(static_cast<std::size_t>(n), 0);
        targets_.assign(static_cast<std::size_t>(n), 0);
        for (auto [a, t] : attacks) {
            if (a < 0 || a >= n || t < 0 || t >= n)
                throw Error("attack index out of range");
            if (a == t)
                throw Error("self-attack on '" + names_[static_cast<std::size_t>(a)] +
                            "' (attacks join distinct arguments)");
            targets_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << t;
            attackers_[static_cast<std::size_t>(t)] |= std::uint64_t{1} << a;
        }
    }

    int n() const { return static_cast<int>(names_.size()); }
    std::uint64_t full_mask() const { return low_mask(n()); }

    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require_index(const std::string& name) const {
        auto ix = index_of(name);
        if (!ix) throw Error("unknown argument '" + name + "'");
        return *ix;
    }

    bool attacks(int attacker, int target) const {
        check_index(attacker);
        check_index(target);
        return (targets_[static_cast<std::size_t>(attacker)] >> target) & 1;
    }

    std::uint64_t attackers_of(int i) const { return attackers_[static_cast<std::size_t>(i)]; }
    std::uint64_t targets_of(int i) const { return targets_[static_cast<std::size_t>(i)]; }

    int attack_count() const {
        int total = 0;
        for (auto m : targets_) total += popcount(m);
        return total;
    }

    // All attack pairs sorted lexicographically by (attacker name, target name),
    // the serializer's order.
    std::vector<std::pair<int, int>> attack_pairs_by_name() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n(); ++a) {
            std::uint64_t t = targets_[static_cast<std::size_t>(a)];
            while (t) {
                int b = std::countr_zero(t);
                t &= t - 1;
                out.emplace_back(a, b);
            }
        }
        std::sort(out.begin(), out.end(), [this](auto p, auto q) {
            if (name(p.first) != name(q.first)) return name(p.first) < name(q.first);
            return name(p.second) < name(q.second);
        });
        return out;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n())
            throw Error("argument index " + std::to_string(i) + " out of range [0, " +
                        std::to_string(n()) + ")");
    }

    void check_width(const ArgSet& s) const {
        if (s.n != n())
            throw WidthMismatch("set width " + std::to_string(s.n) +
                                " does not match system width " + std::to_string(n()));
        if (s.bits & ~full_mask())
            throw WidthMismatch("set has bits beyond position n-1");
    }

    ArgSet set_of(std::uint64_t bits) const { return ArgSet{bits, n()}; }

    ArgSet set_of_names(const std::vector<std::string>& members) const {
        std::uint64_t bits = 0;
        for (const auto& m : members) bits |= std::uint64_t{1} << require_index(m);
        return set_of(bits);
    }

    std::vector<std::string> names_of(const ArgSet& s) const {
        check_width(s);
        std::vector<std::string> out;
        std::uint64_t b = s.bits;
        while (b) {
            int i = std::countr_zero(b);
            b &= b - 1;
            out.push_back(name(i));
        }
        return out;
    }

    static void validate_name(const std::string& name) {
        if (name.empty()) throw Error("empty argument name");
        for (char c : name)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw Error("argument name '" + name + "' contains characters outside [A-Za-z0-9_]");
    }

    friend bool operator==(const ArgumentSystem& a, const ArgumentSystem& b) {
        return a.names_ == b.names_ && a.targets_ == b.targets_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::uint64_t> attackers_;  // attackers_[t]: mask of args attacking t
    std::vector<std::uint64_t> targets_;    // targets_[a]: mask of args attacked by a
};

namespace detail {

// Union of the targets of all members: everything S attacks.
inline std::uint64_t attacked_by(const ArgumentSystem& h, std::uint64_t set) {
    std::uint64_t out = 0;
    while (set) {
        int i = std::countr_zero(set);
        set &= set - 1;
        out |= h.targets_of(i);
    }
    return out;
}

// Union of the attackers of all members: everything attacking S.
inline std::uint64_t attacking(const ArgumentSystem& h, std::uint64_t set) {
    std::uint64_t out = 0;
    while (set) {
        int i = std::countr_zero(set);
        set &= set - 1;
        out |= h.attackers_of(i);
    }
    return out;
}

inline bool conflict_free_mask(const ArgumentSystem& h, std::uint64_t set) {
    std::uint64_t rest = set;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        if (h.targets_of(i) & set) return false;
    }
    return true;
}

inline bool admissible_mask(const ArgumentSystem& h, std::uint64_t set) {
    if (!conflict_free_mask(h, set)) return false;
    return (attacking(h, set) & ~attacked_by(h, set)) == 0;
}

inline bool stable_mask(const ArgumentSystem& h, std::uint64_t set) {
    if (!conflict_free_mask(h, set)) return false;
    return (set | attacked_by(h, set)) == h.full_mask();
}

}  // namespace detail

// Definition-style predicates. All pure; width and index errors throw.

inline bool is_attacked(const ArgumentSystem& h, const ArgSet& r, int s) {
    h.check_width(r);
    h.check_index(s);
    return (h.attackers_of(s) & r.bits) != 0;
}

inline bool is_acceptable(const ArgumentSystem& h, int x, const ArgSet& s) {
    h.check_width(s);
    h.check_index(x);
    return (h.attackers_of(x) & ~detail::attacked_by(h, s.bits)) == 0;
}

inline bool is_conflict_free(const ArgumentSystem& h, const ArgSet& s) {
    h.check_width(s);
    return detail::conflict_free_mask(h, s.bits);
}

inline bool is_admissible(const ArgumentSystem& h, const ArgSet& s) {
    h.check_width(s);
    return detail::admissible_mask(h, s.bits);
}

inline bool is_stable(const ArgumentSystem& h, const ArgSet& s) {
    h.check_width(s);
    return detail::stable_mask(h, s.bits);
}

// A canonically ordered list of subsets: extension families PE/SE/BE and the
// candidate input of the realisability problem. Order is ascending
// lexicographic on characteristic strings b_1...b_n.
struct ExtensionFamily {
    Semantics semantics = Semantics::preferred;
    int n = 0;
    std::vector<ArgSet> members;

    static ExtensionFamily from_masks(Semantics sem, int n, std::vector<std::uint64_t> masks) {
        std::sort(masks.begin(), masks.end(),
                  [n](std::uint64_t a, std::uint64_t b) { return lex_less(a, b, n); });
        for (std::size_t i = 1; i < masks.size(); ++i)
            if (masks[i] == masks[i - 1]) throw Error("duplicate member in extension family");
        ExtensionFamily fam;
        fam.semantics = sem;
        fam.n = n;
        fam.members.reserve(masks.size());
        for (auto m : masks) {
            if (m & ~low_mask(n)) throw WidthMismatch("family member has bits beyond position n-1");
            fam.members.emplace_back(m, n);
        }
        return fam;
    }

    std::vector<std::uint64_t> masks() const {
        std::vector<std::uint64_t> out;
        out.reserve(members.size());
        for (const auto& m : members) out.push_back(m.bits);
        return out;
    }

    bool contains(std::uint64_t mask) const {
        for (const auto& m : members)
            if (m.bits == mask) return true;
        return false;
    }

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }

    bool is_antichain() const {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                if (i != j && members[i].bits != members[j].bits &&
                    (members[i].bits & ~members[j].bits) == 0)
                    return false;
        return true;
    }

    friend bool operator==(const ExtensionFamily& a, const ExtensionFamily& b) {
        return a.n == b.n && a.masks() == b.masks();
    }
};

// ---------------------------------------------------------------------------
// AF text format
//
//   arg(<name>).        declares an argument
//   att(<a>,<b>).       declares "a attacks b"
//   #                   starts a comment (to end of line)
//
// Statements are '.'-terminated; declarations may appear in any order, but
// every att endpoint must be declared somewhere in the file.
// ---------------------------------------------------------------------------

namespace detail {

struct AfStatement {
    bool is_attack = false;
    std::string a;  // argument, or attacker
    std::string b;  // target (attacks only)
    int line = 0;
};

inline std::vector<AfStatement> scan_af(std::istream& in) {
    std::vector<AfStatement> out;
    std::string text;
    {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::size_t i = 0;
    int line = 1;
    auto fail = [](int ln, const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(ln) + ": " + msg);
    };
    auto skip_blank = [&]() {
        while (i < text.size()) {
            char c = text[i];
            if (c == '\n') {
                ++line;
                ++i;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++i;
            } else if (c == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else {
                break;
            }
        }
    };
    auto read_name = [&](int ln) {
        std::string name;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            name.push_back(text[i++]);
        if (name.empty()) fail(ln, "expected an argument name");
        return name;
    };
    auto expect = [&](char c, int ln) {
        skip_blank();
        if (i >= text.size() || text[i] != c)
            fail(ln, std::string("expected '") + c + "'");
        ++i;
    };
    while (true) {
        skip_blank();
        if (i >= text.size()) break;
        int ln = line;
        std::string kw = read_name(ln);
        AfStatement st;
        st.line = ln;
        if (kw == "arg") {
            expect('(', ln);
            skip_blank();
            st.a = read_name(ln);
            expect(')', ln);
        } else if (kw == "att") {
            st.is_attack = true;
            expect('(', ln);
            skip_blank();
            st.a = read_name(ln);
            expect(',', ln);
            skip_blank();
            st.b = read_name(ln);
            expect(')', ln);
        } else {
            fail(ln, "unknown statement '" + kw + "' (expected arg or att)");
        }
        expect('.', ln);
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace detail

inline ArgumentSystem parse_af(std::istream& in) {
    auto statements = detail::scan_af(in);
    std::vector<std::string> names;
    std::map<std::string, int> seen;
    for (const auto& st : statements) {
        if (st.is_attack) continue;
        if (seen.count(st.a))
            throw ParseError("line " + std::to_string(st.line) + ": duplicate declaration of '" +
                             st.a + "'");
        seen.emplace(st.a, static_cast<int>(names.size()));
        names.push_back(st.a);
        if (names.size() > static_cast<std::size_t>(kMaxArgs))
            throw CapExceeded("line " + std::to_string(st.line) +
                              ": more than 64 arguments declared");
    }
    std::vector<std::pair<int, int>> attacks;
    for (const auto& st : statements) {
        if (!st.is_attack) continue;
        auto a = seen.find(st.a);
        auto b = seen.find(st.b);
        if (a == seen.end())
            throw ParseError("line " + std::to_string(st.line) + ": att references undeclared '" +
                             st.a + "'");
        if (b == seen.end())
            throw ParseError("line " + std::to_string(st.line) + ": att references undeclared '" +
                             st.b + "'");
        if (a->second == b->second)
            throw ParseError("line " + std::to_string(st.line) + ": self-attack att(" + st.a + "," +
                             st.b + ")");
        attacks.emplace_back(a->second, b->second);
    }
    return ArgumentSystem(std::move(names), attacks);
}

inline ArgumentSystem parse_af(const std::string& text) {
    std::istringstream in(text);
    return parse_af(in);
}

// Emits all arg lines in declaration order, then all att lines sorted
// lexicographically by (attacker, target) names. parse_af of the output
// reproduces the system exactly.
inline void serialize_af(const ArgumentSystem& h, std::ostream& out) {
    for (int i = 0; i < h.n(); ++i) out << "arg(" << h.name(i) << ").\n";
    for (auto [a, b] : h.attack_pairs_by_name())
        out << "att(" << h.name(a) << "," << h.name(b) << ").\n";
}

inline std::string serialize_af(const ArgumentSystem& h) {
    std::ostringstream out;
    serialize_af(h, out);
    return out.str();
}

}  // namespace pexlab
