#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pexlab/realisable.hpp"
#include "pexlab/semantics.hpp"

using namespace pexlab;

namespace {

ExtensionFamily family_of(int n, std::vector<std::uint64_t> masks) {
    return ExtensionFamily::from_masks(Semantics::preferred, n, std::move(masks));
}

}  // namespace

TEST_CASE("prefilter spec examples", "[realisable]") {
    REQUIRE_FALSE(prefilter(family_of(2, {})).pass);
    REQUIRE_FALSE(prefilter(family_of(2, {0b01, 0b11})).pass);  // not an antichain
    REQUIRE(prefilter(family_of(2, {0b01, 0b10})).pass);
    auto with_empty = prefilter(family_of(2, {0, 0b01}));
    REQUIRE_FALSE(with_empty.pass);
    REQUIRE(with_empty.reasons.size() == 2);  // antichain violation and the empty-set rule
    REQUIRE(prefilter(family_of(2, {0})).pass);  // {{}} alone is fine
}

TEST_CASE("condition_literal spec examples", "[realisable]") {
    REQUIRE(condition_literal(family_of(2, {0b01, 0b10})).holds);

    auto r = condition_literal(family_of(3, {0b011}));
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness);
    REQUIRE(r.witness->t_set == 0b111);
    REQUIRE(r.witness->x == 0);
    REQUIRE(r.witness->y == 1);
    REQUIRE(r.witness->member_index == 0);

    REQUIRE(condition_literal(family_of(3, {0b111})).holds);  // no strict superset exists
}

TEST_CASE("condition_existential spec examples", "[realisable]") {
    REQUIRE(condition_existential(family_of(3, {0b011})).holds);  // pair {x1,x3} in no member
    REQUIRE(condition_existential(family_of(2, {0b01, 0b10})).holds);
    REQUIRE(condition_existential(family_of(3, {0b111})).holds);

    // {{}}: T = {z} has no two-element subset, so the existential reading fails
    auto r = condition_existential(family_of(1, {0}));
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness);
    REQUIRE(r.witness->t_set == 0b1);
}

TEST_CASE("realise_bruteforce spec examples", "[realisable]") {
    auto two = realise_bruteforce(family_of(2, {0b01, 0b10}));
    REQUIRE(two);
    REQUIRE(oracle_extensions(*two, Semantics::preferred).masks() ==
            std::vector<std::uint64_t>{0b10, 0b01});
    // first witness in relation-index order is the full 2-cycle
    REQUIRE(two->attacks(0, 1));
    REQUIRE(two->attacks(1, 0));

    auto pair3 = realise_bruteforce(family_of(3, {0b011}));
    REQUIRE(pair3);
    REQUIRE(oracle_extensions(*pair3, Semantics::preferred).masks() ==
            std::vector<std::uint64_t>{0b011});

    REQUIRE_FALSE(realise_bruteforce(family_of(2, {0b01, 0b11})));  // antichain violation
    REQUIRE_THROWS_AS(realise_bruteforce(family_of(5, {0b1})), CapExceeded);
}

TEST_CASE("returned witnesses are deterministic", "[realisable]") {
    auto a = realise_bruteforce(family_of(3, {0b011}));
    auto b = realise_bruteforce(family_of(3, {0b011}));
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(serialize_af(*a) == serialize_af(*b));
}

TEST_CASE("prefilter failure implies unrealisable, exhaustively at n=2", "[realisable]") {
    for (unsigned fm = 0; fm < 16; ++fm) {
        std::vector<std::uint64_t> members;
        for (unsigned s = 0; s < 4; ++s)
            if ((fm >> s) & 1) members.push_back(s);
        auto fam = family_of(2, members);
        auto witness = realise_bruteforce(fam);
        CAPTURE(fm);
        if (!prefilter(fam).pass) REQUIRE_FALSE(witness);
        if (witness) REQUIRE(prefilter(fam).pass);
    }
}

TEST_CASE("survey(1) has a single system realizing {{x1}}", "[realisable]") {
    auto r = survey(1);
    REQUIRE(r.relations == 1);
    REQUIRE(r.realized_count == 1);
    REQUIRE(r.realized[0].members == std::vector<std::uint64_t>{0b1});
}

TEST_CASE("survey(2) realizes exactly the four spec families", "[realisable]") {
    auto r = survey(2);
    REQUIRE(r.relations == 4);
    REQUIRE(r.antichain_candidates == 6);
    REQUIRE(r.realized_count == 4);
    REQUIRE(r.all_realized_pass_prefilter);
    std::vector<std::vector<std::uint64_t>> families;
    for (const auto& fam : r.realized) families.push_back(fam.members);
    std::vector<std::vector<std::uint64_t>> expected = {
        {0b01}, {0b10}, {0b11}, {0b10, 0b01}};
    std::sort(families.begin(), families.end());
    std::sort(expected.begin(), expected.end());
    REQUIRE(families == expected);
}

TEST_CASE("survey(3) finds the documented counterexamples", "[realisable]") {
    auto r = survey(3);
    REQUIRE(r.relations == 64);
    REQUIRE(r.antichain_candidates == 20);
    REQUIRE(r.realized_count == 18);
    REQUIRE(r.all_realized_pass_prefilter);

    // literal reading is not necessary: {{x1,x2}} is realized but fails it
    REQUIRE(r.literal.realized_false > 0);
    REQUIRE(r.literal_necessity);
    REQUIRE(r.literal_necessity->family == std::vector<std::uint64_t>{0b011});
    REQUIRE(r.literal_necessity->detail);
    REQUIRE(r.literal_necessity->detail->t_set == 0b111);

    // existential reading is not necessary either: {{}} is realized (3-cycle)
    REQUIRE(r.existential.realized_false > 0);
    REQUIRE(r.existential_necessity);
    REQUIRE(r.existential_necessity->family == std::vector<std::uint64_t>{0});

    // neither reading is sufficient on raw antichain candidates: the empty
    // family passes both conditions vacuously but is never realized
    REQUIRE(r.literal.unrealized_true > 0);
    REQUIRE(r.existential.unrealized_true > 0);
}

TEST_CASE("survey output is deterministic and thread-count independent", "[realisable]") {
    auto a = format_survey(survey(3, 1));
    auto b = format_survey(survey(3, 4));
    REQUIRE(a == b);
}

TEST_CASE("survey(4) frozen counts", "[realisable]") {
    // frozen after the first verified run (independent reimplementation agreed)
    auto r = survey(4);
    REQUIRE(r.relations == 4096);
    REQUIRE(r.antichain_candidates == 168);
    REQUIRE(r.realized_count == 113);
    REQUIRE(r.all_realized_pass_prefilter);
    // at n=4 the existential reading misses only the {{}} family
    REQUIRE(r.existential.realized_false == 1);
    REQUIRE(r.existential_necessity->family == std::vector<std::uint64_t>{0});
}

TEST_CASE("family file parsing", "[realisable]") {
    std::istringstream in("# candidate\nuniverse 3\nx1,x2\nx3\n-\n");
    auto fam = parse_family_file(in);
    REQUIRE(fam.n == 3);
    REQUIRE(fam.size() == 3);
    REQUIRE(fam.contains(0));      // '-' is the empty extension
    REQUIRE(fam.contains(0b011));
    REQUIRE(fam.contains(0b100));

    std::istringstream no_header("x1,x2\n");
    REQUIRE_THROWS_AS(parse_family_file(no_header), ParseError);
    std::istringstream bad_name("universe 2\nx1,q2\n");
    REQUIRE_THROWS_AS(parse_family_file(bad_name), ParseError);
    std::istringstream out_of_universe("universe 2\nx3\n");
    REQUIRE_THROWS_AS(parse_family_file(out_of_universe), ParseError);
    std::istringstream dup("universe 2\nx1\nx1\n");
    REQUIRE_THROWS_AS(parse_family_file(dup), ParseError);
}

TEST_CASE("format helpers are stable", "[realisable]") {
    REQUIRE(format_set(0b101, 3) == "{x1,x3}");
    REQUIRE(format_set(0, 3) == "{}");
    REQUIRE(format_family({0b10, 0b01}, 2) == "{x2} {x1}");
    REQUIRE(format_family({}, 2) == "(empty)");
}
