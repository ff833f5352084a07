#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "naive_oracle.hpp"
#include "pexlab/generators.hpp"
#include "pexlab/semantics.hpp"

using namespace pexlab;

namespace {

ArgumentSystem from_attacks(int n, const naive::Attacks& attacks) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return ArgumentSystem(names, attacks);
}

std::set<std::set<int>> as_naive(const ExtensionFamily& fam) {
    std::set<std::set<int>> out;
    for (const auto& m : fam.members) out.insert(naive::set_from_mask(static_cast<unsigned>(m.bits)));
    return out;
}

}  // namespace

TEST_CASE("oracle spec examples", "[semantics]") {
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    auto cycle3 = gen_cycle(3);
    auto iso3 = gen_isolated(3);

    auto pe2 = oracle_extensions(cycle2, Semantics::preferred);
    REQUIRE(pe2.masks() == std::vector<std::uint64_t>{0b10, 0b01});  // {b} before {a}

    REQUIRE(oracle_extensions(cycle3, Semantics::preferred).masks() ==
            std::vector<std::uint64_t>{0});
    REQUIRE(oracle_extensions(cycle3, Semantics::stable).empty());
    REQUIRE(oracle_extensions(iso3, Semantics::preferred).masks() ==
            std::vector<std::uint64_t>{0b111});
}

TEST_CASE("oracle rejects systems beyond its cap", "[semantics]") {
    REQUIRE_THROWS_AS(oracle_extensions(gen_isolated(23), Semantics::preferred), CapExceeded);
}

TEST_CASE("search enumeration equals the oracle on every 3-argument digraph", "[semantics]") {
    for (const auto& attacks : naive::all_digraphs(3)) {
        auto h = from_attacks(3, attacks);
        CAPTURE(attacks);
        REQUIRE(enumerate_preferred(h).masks() ==
                oracle_extensions(h, Semantics::preferred).masks());
        REQUIRE(enumerate_stable(h).masks() == oracle_extensions(h, Semantics::stable).masks());
        // and the oracle itself agrees with the naive reimplementation
        REQUIRE(as_naive(oracle_extensions(h, Semantics::preferred)) ==
                naive::all_preferred(3, attacks));
        REQUIRE(as_naive(oracle_extensions(h, Semantics::stable)) == naive::all_stable(3, attacks));
    }
}

TEST_CASE("search enumeration equals the oracle on seeded random systems", "[semantics]") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        for (double p : {0.15, 0.4, 0.8}) {
            auto h = gen_random(7, p, seed);
            CAPTURE(seed, p);
            REQUIRE(enumerate_preferred(h).masks() ==
                    oracle_extensions(h, Semantics::preferred).masks());
            REQUIRE(enumerate_stable(h).masks() ==
                    oracle_extensions(h, Semantics::stable).masks());
        }
    }
    // a wider sweep at n = 10, sparse through dense
    for (std::uint64_t seed = 50; seed < 62; ++seed) {
        for (double p : {0.08, 0.25, 0.55, 0.9}) {
            auto h = gen_random(10, p, seed);
            CAPTURE(seed, p);
            REQUIRE(enumerate_preferred(h).masks() ==
                    oracle_extensions(h, Semantics::preferred).masks());
            REQUIRE(enumerate_stable(h).masks() ==
                    oracle_extensions(h, Semantics::stable).masks());
        }
    }
}

TEST_CASE("enumerate spec examples", "[semantics]") {
    REQUIRE(enumerate_preferred(gen_k3(2)).size() == 9);
    REQUIRE(enumerate_preferred(parse_af("arg(a). arg(b). att(a,b).")).masks() ==
            std::vector<std::uint64_t>{0b01});
    auto empty = parse_af("");
    REQUIRE(enumerate_preferred(empty).masks() == std::vector<std::uint64_t>{0});
    REQUIRE(enumerate_stable(empty).masks() == std::vector<std::uint64_t>{0});

    REQUIRE(enumerate_stable(gen_cycle(3)).empty());
    REQUIRE(enumerate_stable(parse_af("arg(a). arg(b). att(a,b). att(b,a).")).size() == 2);
    REQUIRE(enumerate_stable(gen_k3(1)).masks() ==
            std::vector<std::uint64_t>{0b100, 0b010, 0b001});
}

TEST_CASE("preferred family is a non-empty antichain; stable subset of preferred", "[semantics]") {
    for (std::uint64_t seed = 20; seed < 28; ++seed) {
        auto h = gen_random(6, 0.35, seed);
        auto pe = enumerate_preferred(h);
        REQUIRE_FALSE(pe.empty());
        REQUIRE(pe.is_antichain());
        for (auto m : enumerate_stable(h).masks()) REQUIRE(pe.contains(m));
    }
}

TEST_CASE("is_preferred needs a complete superset search", "[semantics]") {
    auto gadget = parse_af("arg(a). arg(b). arg(c). arg(d). att(c,a). att(d,b). att(b,c). att(a,d).");
    // no single argument extends {} admissibly, yet {a,b} does
    for (int x = 0; x < 4; ++x)
        REQUIRE_FALSE(is_admissible(gadget, gadget.set_of(std::uint64_t{1} << x)));
    REQUIRE_FALSE(is_preferred(gadget, gadget.set_of(0)));

    REQUIRE(is_preferred(parse_af("arg(a). arg(b). att(a,b)."),
                         parse_af("arg(a). arg(b). att(a,b).").set_of_names({"a"})));
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    REQUIRE_FALSE(is_preferred(cycle2, cycle2.set_of_names({"a", "b"})));  // not conflict-free
}

TEST_CASE("is_preferred matches oracle membership everywhere at n=3", "[semantics]") {
    for (const auto& attacks : naive::all_digraphs(3)) {
        auto h = from_attacks(3, attacks);
        auto pe = oracle_extensions(h, Semantics::preferred);
        for (unsigned mask = 0; mask < 8; ++mask)
            REQUIRE(is_preferred(h, h.set_of(mask)) == pe.contains(mask));
    }
}

TEST_CASE("acceptance spec examples", "[semantics]") {
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    auto cycle3 = gen_cycle(3);
    auto chain = parse_af("arg(a). arg(b). att(a,b).");

    REQUIRE(credulous(cycle2, 0));
    for (int x = 0; x < 3; ++x) REQUIRE_FALSE(credulous(cycle3, x));
    REQUIRE(credulous(gen_isolated(1), 0));

    REQUIRE(sceptical(chain, 0));
    REQUIRE_FALSE(sceptical(cycle2, 0));
    for (int x = 0; x < 3; ++x) REQUIRE_FALSE(sceptical(cycle3, x));

    REQUIRE_THROWS_AS(credulous(chain, 9), Error);
}

TEST_CASE("credulous equals admissible-set membership; sceptical implies credulous", "[semantics]") {
    for (const auto& attacks : naive::all_digraphs(3)) {
        auto h = from_attacks(3, attacks);
        auto admissible = naive::all_admissible(3, attacks);
        for (int x = 0; x < 3; ++x) {
            bool in_some = false;
            for (const auto& s : admissible)
                if (s.count(x)) in_some = true;
            REQUIRE(credulous(h, x) == in_some);
            if (sceptical(h, x)) REQUIRE(credulous(h, x));
        }
    }
}

TEST_CASE("coherence spec examples", "[semantics]") {
    REQUIRE(is_coherent(parse_af("arg(a). arg(b). att(a,b). att(b,a).")));
    REQUIRE_FALSE(is_coherent(gen_cycle(3)));
    REQUIRE(is_coherent(gen_isolated(3)));
}

TEST_CASE("k3 preferred counts grow as 3^t and stay coherent", "[semantics]") {
    std::size_t expected = 1;
    for (int t = 1; t <= 6; ++t) {
        expected *= 3;
        auto h = gen_k3(t);
        REQUIRE(enumerate_preferred(h).size() == expected);
        REQUIRE(is_coherent(h));
    }
}

TEST_CASE("node budget is reported, never a wrong answer", "[semantics]") {
    auto h = gen_k3(4);
    SearchLimits tiny{10};
    REQUIRE_THROWS_AS(enumerate_preferred(h, tiny), BudgetExceeded);
    SearchLimits plenty{1u << 20};
    REQUIRE(enumerate_preferred(h, plenty).size() == 81);
}

TEST_CASE("enumeration output is deterministic", "[semantics]") {
    auto h = gen_random(7, 0.3, 99);
    REQUIRE(enumerate_preferred(h).masks() == enumerate_preferred(h).masks());
    REQUIRE(enumerate_stable(h).masks() == enumerate_stable(h).masks());
}
