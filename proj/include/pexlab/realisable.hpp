#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/bits.hpp"
#include "pexlab/semantics.hpp"

namespace pexlab {

inline constexpr int kRealiseCap = 4;      // 2^(n(n-1)) relation scan
inline constexpr int kRealiseOptIn = 5;    // ~1M relations, explicit opt-in
inline constexpr int kSurveyCap = 4;

// Cheap necessary conditions: PE(H) is never empty, always an antichain, and
// contains the empty set only when it is the sole member.
struct PrefilterResult {
    bool pass = true;
    std::vector<std::string> reasons;
};

inline PrefilterResult prefilter(const ExtensionFamily& family) {
    PrefilterResult r;
    if (family.empty()) {
        r.pass = false;
        r.reasons.push_back("family is empty; a preferred-extension family never is");
    }
    if (!family.is_antichain()) {
        r.pass = false;
        r.reasons.push_back("members are not a subset-antichain");
    }
    if (family.size() > 1 && family.contains(0)) {
        r.pass = false;
        r.reasons.push_back("the empty set cannot share a family with other members");
    }
    return r;
}

struct ConditionWitness {
    std::uint64_t t_set = 0;   // the violating superset T = S_i + {z}
    int x = -1, y = -1;        // the pair (literal reading only)
    int member_index = -1;     // the member containing the pair (literal reading only)
};

struct ConditionResult {
    bool holds = true;
    std::optional<ConditionWitness> witness;
};

namespace detail {

// Iterates the supersets T = S_i + {z} of family members in deterministic
// member/argument order; fn returning false stops the scan.
template <class Fn>
void for_each_single_addition(const ExtensionFamily& family, Fn&& fn) {
    std::uint64_t universe = low_mask(family.n);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        std::uint64_t base = family.members[i].bits;
        std::uint64_t fresh = universe & ~base;
        while (fresh) {
            int z = std::countr_zero(fresh);
            fresh &= fresh - 1;
            if (!fn(base | (std::uint64_t{1} << z))) return;
        }
    }
}

}  // namespace detail

// Literal reading of the conjectured condition: for every T formed by adding
// one argument to a member, no two-element subset of T may be contained in
// any member. Returns the first violating (T, {x,y}, member).
inline ConditionResult condition_literal(const ExtensionFamily& family) {
    ConditionResult result;
    detail::for_each_single_addition(family, [&](std::uint64_t t) {
        for (int x = 0; x < family.n; ++x) {
            if (!((t >> x) & 1)) continue;
            for (int y = x + 1; y < family.n; ++y) {
                if (!((t >> y) & 1)) continue;
                std::uint64_t pair = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
                for (std::size_t k = 0; k < family.members.size(); ++k) {
                    if ((pair & ~family.members[k].bits) == 0) {
                        result.holds = false;
                        result.witness = ConditionWitness{t, x, y, static_cast<int>(k)};
                        return false;
                    }
                }
            }
        }
        return true;
    });
    return result;
}

// Existential reading: every such T must contain some pair that occurs in no
// member. Returns the first T with no such pair.
inline ConditionResult condition_existential(const ExtensionFamily& family) {
    ConditionResult result;
    detail::for_each_single_addition(family, [&](std::uint64_t t) {
        for (int x = 0; x < family.n; ++x) {
            if (!((t >> x) & 1)) continue;
            for (int y = x + 1; y < family.n; ++y) {
                if (!((t >> y) & 1)) continue;
                std::uint64_t pair = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
                bool in_some_member = false;
                for (const auto& m : family.members)
                    if ((pair & ~m.bits) == 0) {
                        in_some_member = true;
                        break;
                    }
                if (!in_some_member) return true;  // T has its witness pair
            }
        }
        result.holds = false;
        result.witness = ConditionWitness{t, -1, -1, -1};
        return false;
    });
    return result;
}

namespace detail {

// Attack-relation scan order: ordered pairs (i,j), i != j, sorted by (i,j);
// relation index = bitmask over that pair list.
inline std::vector<std::pair<int, int>> relation_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    return pairs;
}

inline std::vector<std::string> canonical_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

inline ArgumentSystem system_from_relation(int n, const std::vector<std::pair<int, int>>& pairs,
                                           std::uint64_t rel) {
    std::vector<std::pair<int, int>> attacks;
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((rel >> b) & 1) attacks.push_back(pairs[b]);
    return ArgumentSystem(canonical_names(n), attacks);
}

// PE family masks straight from attacker/target masks, avoiding system
// construction in the hot scan.
inline std::vector<std::uint64_t> pe_masks_of_relation(
    int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t rel) {
    std::uint64_t attackers[kRealiseOptIn + 1] = {};
    std::uint64_t targets[kRealiseOptIn + 1] = {};
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((rel >> b) & 1) {
            targets[pairs[b].first] |= std::uint64_t{1} << pairs[b].second;
            attackers[pairs[b].second] |= std::uint64_t{1} << pairs[b].first;
        }
    std::vector<std::uint64_t> admissible;
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t set = 0; set < count; ++set) {
        std::uint64_t att = 0, tgt = 0;
        bool cf = true;
        std::uint64_t rest = set;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (targets[i] & set) {
                cf = false;
                break;
            }
            att |= attackers[i];
            tgt |= targets[i];
        }
        if (cf && (att & ~tgt) == 0) admissible.push_back(set);
    }
    auto pe = maximal_elements(std::move(admissible));
    std::sort(pe.begin(), pe.end(),
              [n](std::uint64_t a, std::uint64_t b) { return lex_less(a, b, n); });
    return pe;
}

}  // namespace detail

// Scans every attack relation on x1..xn in index order and returns the first
// system whose preferred family equals the input, re-verified against the
// power-set oracle and the search enumerator before returning.
inline std::optional<ArgumentSystem> realise_bruteforce(const ExtensionFamily& family,
                                                        bool allow_n5 = false) {
    int n = family.n;
    int cap = allow_n5 ? kRealiseOptIn : kRealiseCap;
    if (n < 1 || n > cap)
        throw CapExceeded("brute-force realisation capped at n <= " + std::to_string(cap));
    auto pairs = detail::relation_pairs(n);
    auto want = family.masks();
    std::uint64_t relations = std::uint64_t{1} << pairs.size();
    for (std::uint64_t rel = 0; rel < relations; ++rel) {
        if (detail::pe_masks_of_relation(n, pairs, rel) != want) continue;
        ArgumentSystem h = detail::system_from_relation(n, pairs, rel);
        if (oracle_extensions(h, Semantics::preferred).masks() != want ||
            enumerate_preferred(h).masks() != want)
            throw Error("realisation scan disagrees with its own re-verification");
        return h;
    }
    return std::nullopt;
}

// One realized family with how often and where it first appeared.
struct RealizedFamily {
    std::vector<std::uint64_t> members;
    std::uint64_t systems = 0;
    std::uint64_t first_relation = 0;
};

struct ConditionStats {
    std::uint64_t realized_true = 0;
    std::uint64_t realized_false = 0;    // necessity counterexamples
    std::uint64_t unrealized_true = 0;   // sufficiency counterexamples
    std::uint64_t unrealized_false = 0;
};

struct SurveyWitness {
    std::vector<std::uint64_t> family;
    std::optional<ConditionWitness> detail;  // condition-internal witness if any
};

struct SurveyReport {
    int n = 0;
    std::uint64_t relations = 0;
    std::uint64_t antichain_candidates = 0;  // includes the empty family
    std::uint64_t realized_count = 0;
    bool all_realized_pass_prefilter = true;
    ConditionStats literal;
    ConditionStats existential;
    std::optional<SurveyWitness> literal_necessity;
    std::optional<SurveyWitness> literal_sufficiency;
    std::optional<SurveyWitness> existential_necessity;
    std::optional<SurveyWitness> existential_sufficiency;
    std::vector<RealizedFamily> realized;  // canonical family order
};

// Exhaustive cross-tabulation of realized preferred families against both
// condition readings, over every attack relation and every antichain family.
inline SurveyReport survey(int n, int threads = 1) {
    if (n < 1 || n > kSurveyCap)
        throw CapExceeded("survey capped at n <= " + std::to_string(kSurveyCap));
    auto pairs = detail::relation_pairs(n);
    std::uint64_t relations = std::uint64_t{1} << pairs.size();

    // family key -> (count, first relation); merged across threads
    std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>> realized;
    std::mutex merge_lock;
    parallel_chunks(relations, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::map<std::vector<std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>> local;
        for (std::uint64_t rel = begin; rel < end; ++rel) {
            auto pe = detail::pe_masks_of_relation(n, pairs, rel);
            auto [it, fresh] = local.try_emplace(pe, 0, rel);
            it->second.first += 1;
            if (!fresh && rel < it->second.second) it->second.second = rel;
        }
        std::lock_guard<std::mutex> guard(merge_lock);
        for (auto& [key, stat] : local) {
            auto [it, fresh] = realized.try_emplace(key, stat);
            if (!fresh) {
                it->second.first += stat.first;
                if (stat.second < it->second.second) it->second.second = stat.second;
            }
        }
    });

    SurveyReport report;
    report.n = n;
    report.relations = relations;
    report.realized_count = realized.size();
    for (const auto& [key, stat] : realized) {
        report.realized.push_back({key, stat.first, stat.second});
        auto fam = ExtensionFamily::from_masks(Semantics::preferred, n, key);
        if (!prefilter(fam).pass) report.all_realized_pass_prefilter = false;
    }
    std::sort(report.realized.begin(), report.realized.end(),
              [n](const RealizedFamily& a, const RealizedFamily& b) {
                  if (a.members.size() != b.members.size())
                      return a.members.size() < b.members.size();
                  for (std::size_t i = 0; i < a.members.size(); ++i)
                      if (a.members[i] != b.members[i])
                          return lex_less(a.members[i], b.members[i], n);
                  return false;
              });

    // every antichain family over the power set, in family-mask order
    std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t family_masks = std::uint64_t{1} << subsets;
    for (std::uint64_t fm = 0; fm < family_masks; ++fm) {
        std::vector<std::uint64_t> members;
        for (std::uint64_t s = 0; s < subsets; ++s)
            if ((fm >> s) & 1) members.push_back(s);
        bool antichain = true;
        for (std::size_t i = 0; i < members.size() && antichain; ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                if (i != j && (members[i] & ~members[j]) == 0) {
                    antichain = false;
                    break;
                }
        if (!antichain) continue;
        ++report.antichain_candidates;
        auto fam = ExtensionFamily::from_masks(Semantics::preferred, n, members);
        bool is_realized = realized.count(fam.masks()) != 0;
        auto lit = condition_literal(fam);
        auto ex = condition_existential(fam);
        auto tally = [&](ConditionStats& stats, const ConditionResult& cond,
                         std::optional<SurveyWitness>& necessity,
                         std::optional<SurveyWitness>& sufficiency) {
            if (is_realized && cond.holds) ++stats.realized_true;
            if (is_realized && !cond.holds) {
                ++stats.realized_false;
                if (!necessity) necessity = SurveyWitness{fam.masks(), cond.witness};
            }
            if (!is_realized && cond.holds) {
                ++stats.unrealized_true;
                if (!sufficiency) sufficiency = SurveyWitness{fam.masks(), std::nullopt};
            }
            if (!is_realized && !cond.holds) ++stats.unrealized_false;
        };
        tally(report.literal, lit, report.literal_necessity, report.literal_sufficiency);
        tally(report.existential, ex, report.existential_necessity,
              report.existential_sufficiency);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Text formats: candidate family file and the survey report.
// ---------------------------------------------------------------------------

// Family file: header "universe <n>", then one extension per line as a
// comma-separated list over x1..xn. The empty extension is a lone '-';
// blank lines and '#' comments are skipped.
inline ExtensionFamily parse_family_file(std::istream& in) {
    std::string line;
    int ln = 0;
    int n = -1;
    std::vector<std::uint64_t> members;
    while (std::getline(in, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            std::size_t b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        if (n < 0) {
            std::istringstream hs(line);
            std::string kw;
            if (!(hs >> kw >> n) || kw != "universe" || n < 0 || n > kMaxArgs)
                throw ParseError("family line " + std::to_string(ln) +
                                 ": expected header 'universe <n>'");
            continue;
        }
        std::uint64_t bits = 0;
        if (line != "-") {
            std::istringstream ls(line);
            std::string item;
            while (std::getline(ls, item, ',')) {
                item = trim(item);
                if (item.size() < 2 || item[0] != 'x')
                    throw ParseError("family line " + std::to_string(ln) + ": bad argument '" +
                                     item + "' (expected x1..x" + std::to_string(n) + ")");
                int ix = 0;
                for (std::size_t k = 1; k < item.size(); ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(item[k])))
                        throw ParseError("family line " + std::to_string(ln) + ": bad argument '" +
                                         item + "'");
                    ix = ix * 10 + (item[k] - '0');
                }
                if (ix < 1 || ix > n)
                    throw ParseError("family line " + std::to_string(ln) + ": argument '" + item +
                                     "' outside universe");
                bits |= std::uint64_t{1} << (ix - 1);
            }
        }
        for (auto m : members)
            if (m == bits)
                throw ParseError("family line " + std::to_string(ln) + ": duplicate extension");
        members.push_back(bits);
    }
    if (n < 0) throw ParseError("family file has no 'universe <n>' header");
    return ExtensionFamily::from_masks(Semantics::preferred, n, members);
}

inline std::string format_set(std::uint64_t bits, int n) {
    std::string out = "{";
    bool first = true;
    for (int j = 0; j < n; ++j)
        if ((bits >> j) & 1) {
            if (!first) out += ",";
            out += "x" + std::to_string(j + 1);
            first = false;
        }
    return out + "}";
}

inline std::string format_family(const std::vector<std::uint64_t>& members, int n) {
    if (members.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += " ";
        out += format_set(members[i], n);
    }
    return out;
}

inline std::string format_survey(const SurveyReport& r) {
    std::ostringstream out;
    out << "survey universe=" << r.n << "\n";
    out << "relations=" << r.relations << "\n";
    out << "antichain_candidates=" << r.antichain_candidates << "\n";
    out << "realized_families=" << r.realized_count << "\n";
    out << "realized_pass_prefilter=" << (r.all_realized_pass_prefilter ? "true" : "false") << "\n";
    auto stats = [&](const char* name, const ConditionStats& s) {
        out << "condition=" << name << " realized_true=" << s.realized_true
            << " realized_false=" << s.realized_false << " unrealized_true=" << s.unrealized_true
            << " unrealized_false=" << s.unrealized_false
            << " necessary=" << (s.realized_false == 0 ? "true" : "false")
            << " sufficient=" << (s.unrealized_true == 0 ? "true" : "false") << "\n";
    };
    stats("literal", r.literal);
    stats("existential", r.existential);
    auto witness = [&](const char* cond, const char* kind, const std::optional<SurveyWitness>& w) {
        if (!w) return;
        out << "witness condition=" << cond << " kind=" << kind
            << " family=" << format_family(w->family, r.n);
        if (w->detail) {
            out << " T=" << format_set(w->detail->t_set, r.n);
            if (w->detail->x >= 0)
                out << " pair={x" << w->detail->x + 1 << ",x" << w->detail->y + 1 << "} member="
                    << format_set(w->family[static_cast<std::size_t>(w->detail->member_index)], r.n);
        }
        out << "\n";
    };
    witness("literal", "necessity", r.literal_necessity);
    witness("literal", "sufficiency", r.literal_sufficiency);
    witness("existential", "necessity", r.existential_necessity);
    witness("existential", "sufficiency", r.existential_sufficiency);
    for (const auto& fam : r.realized)
        out << "realized family=" << format_family(fam.members, r.n) << " systems=" << fam.systems
            << " first_relation=" << fam.first_relation << "\n";
    return out.str();
}

}  // namespace pexlab
