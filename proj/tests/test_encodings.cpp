#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "naive_oracle.hpp"
#include "pexlab/encodings.hpp"
#include "pexlab/generators.hpp"

using namespace pexlab;

namespace {

std::string container_bytes(const Encoding& e) {
    std::ostringstream out(std::ios::binary);
    write_encoding(e, out);
    return out.str();
}

std::string golden_bytes(const std::string& name) {
    std::ifstream in(std::string(PEXLAB_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ArgumentSystem from_attacks(int n, const naive::Attacks& attacks) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return ArgumentSystem(names, attacks);
}

}  // namespace

TEST_CASE("encode_tab of the 2-cycle matches the golden byte for byte", "[encodings]") {
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    auto e = encode_tab(cycle2, Semantics::preferred);
    REQUIRE(e.row_count == 2);
    REQUIRE(e.payload.size() == 4);  // n * r
    REQUIRE(e.payload.bytes() == std::vector<std::uint8_t>{0x60});  // rows {b},{a} -> 0110

    auto bytes = container_bytes(e);
    REQUIRE(bytes == golden_bytes("two_cycle_tab.peenc"));
    REQUIRE(bytes.size() == 17);
}

TEST_CASE("tab payload length is always n*r", "[encodings]") {
    for (std::uint64_t seed = 1; seed < 6; ++seed) {
        auto h = gen_random(5, 0.5, seed);
        for (auto sem : {Semantics::preferred, Semantics::stable}) {
            auto e = encode_tab(h, sem);
            REQUIRE(e.payload.size() == static_cast<std::size_t>(h.n()) * e.row_count);
        }
    }
    auto empty_family = encode_tab(gen_cycle(3), Semantics::stable);
    REQUIRE(empty_family.row_count == 0);
    REQUIRE(empty_family.payload.empty());
}

TEST_CASE("decide_tab spec examples", "[encodings]") {
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    auto e = encode_tab(cycle2, Semantics::preferred);
    REQUIRE(decide_tab(e, cycle2.set_of_names({"a"})));
    REQUIRE_FALSE(decide_tab(e, cycle2.set_of_names({"a", "b"})));

    auto empty = encode_tab(gen_cycle(3), Semantics::stable);
    for (unsigned m = 0; m < 8; ++m) REQUIRE_FALSE(decide_tab(empty, ArgSet{m, 3}));

    REQUIRE_THROWS_AS(decide_tab(encode_adjacency(cycle2), cycle2.set_of(0)), SchemeMismatch);
    REQUIRE_THROWS_AS(decide_tab(e, ArgSet{0, 3}), WidthMismatch);
}

TEST_CASE("verify_tab accepts round trips and rejects any corruption", "[encodings]") {
    auto h = gen_random(4, 0.5, 3);
    auto e = encode_tab(h, Semantics::preferred);
    REQUIRE(verify_tab(e, h));

    if (e.payload.size() > 0) {
        auto bad = e;
        std::vector<bool> bits;
        for (std::size_t i = 0; i < e.payload.size(); ++i) bits.push_back(e.payload[i]);
        bits[0] = !bits[0];
        bad.payload = BitString(bits);
        REQUIRE_FALSE(verify_tab(bad, h));
    }
    auto wrong_r = e;
    wrong_r.row_count += 1;
    REQUIRE_FALSE(verify_tab(wrong_r, h));
}

TEST_CASE("encode_adjacency matches the golden and its layout", "[encodings]") {
    auto chain = parse_af("arg(a). arg(b). att(a,b).");
    auto e = encode_adjacency(chain);
    REQUIRE(e.payload.size() == 4);  // n^2
    REQUIRE(e.payload.bytes() == std::vector<std::uint8_t>{0x40});  // bits 0100

    REQUIRE(container_bytes(e) == golden_bytes("chain_adjacency.peenc"));

    REQUIRE(encode_adjacency(parse_af("")).payload.empty());
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto h = gen_random(6, 0.5, seed);
        REQUIRE(encode_adjacency(h).payload.size() == 36);
    }
}

TEST_CASE("decide_stable_member spec examples", "[encodings]") {
    auto chain = parse_af("arg(a). arg(b). att(a,b).");
    REQUIRE(decide_stable_member(encode_adjacency(chain), chain.set_of_names({"a"})));
    auto cycle3 = gen_cycle(3);
    auto e3 = encode_adjacency(cycle3);
    for (unsigned m = 0; m < 8; ++m) REQUIRE_FALSE(decide_stable_member(e3, ArgSet{m, 3}));
    auto empty = parse_af("");
    REQUIRE(decide_stable_member(encode_adjacency(empty), empty.set_of(0)));
}

TEST_CASE("truth_table layout", "[encodings]") {
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    auto e = truth_table(cycle2, Semantics::preferred);
    REQUIRE(e.payload.size() == 4);
    // f true exactly at indices 1 ({a}) and 2 ({b})
    REQUIRE_FALSE(e.payload[0]);
    REQUIRE(e.payload[1]);
    REQUIRE(e.payload[2]);
    REQUIRE_FALSE(e.payload[3]);

    auto cyc3 = truth_table(gen_cycle(3), Semantics::preferred);
    REQUIRE(cyc3.payload[0]);
    for (std::size_t i = 1; i < 8; ++i) REQUIRE_FALSE(cyc3.payload[i]);

    REQUIRE_THROWS_AS(truth_table(gen_isolated(21), Semantics::preferred), CapExceeded);
}

TEST_CASE("truth table weight equals family size", "[encodings]") {
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        auto h = gen_random(5, 0.4, seed);
        for (auto sem : {Semantics::preferred, Semantics::stable}) {
            auto e = truth_table(h, sem);
            std::size_t weight = 0;
            for (std::size_t i = 0; i < e.payload.size(); ++i) weight += e.payload[i];
            auto family =
                sem == Semantics::stable ? enumerate_stable(h) : enumerate_preferred(h);
            REQUIRE(weight == family.size());
        }
    }
}

TEST_CASE("dnf formula spec examples", "[encodings]") {
    auto cycle2 = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    auto f = dnf_formula(cycle2, Semantics::preferred);
    REQUIRE(f.literal_count() == 4);
    REQUIRE(f.to_string() == "((~x1 & x2) | (x1 & ~x2))");  // canonical row order {b},{a}

    auto iso = dnf_formula(gen_isolated(3), Semantics::preferred);
    REQUIRE(iso.literal_count() == 3);
    REQUIRE(iso.to_string() == "((x1 & x2) & x3)");

    auto none = dnf_formula(gen_cycle(3), Semantics::stable);
    REQUIRE(none.literal_count() == 0);
    for (unsigned m = 0; m < 8; ++m) REQUIRE_FALSE(none.evaluate(m));
}

TEST_CASE("dnf evaluates exactly like the truth table", "[encodings]") {
    for (std::uint64_t seed = 30; seed < 36; ++seed) {
        auto h = gen_random(5, 0.45, seed);
        for (auto sem : {Semantics::preferred, Semantics::stable}) {
            auto f = dnf_formula(h, sem);
            auto tt = truth_table(h, sem);
            for (std::uint64_t m = 0; m < 32; ++m) REQUIRE(f.evaluate(m) == tt.payload[m]);
        }
    }
}

TEST_CASE("tab and adjacency decisions match the semantic ground truth at n=3", "[encodings]") {
    for (const auto& attacks : naive::all_digraphs(3)) {
        auto h = from_attacks(3, attacks);
        auto tab = encode_tab(h, Semantics::preferred);
        auto adj = encode_adjacency(h);
        for (unsigned mask = 0; mask < 8; ++mask) {
            auto s = h.set_of(mask);
            CAPTURE(attacks, mask);
            REQUIRE(decide_tab(tab, s) == is_preferred(h, s));
            REQUIRE(decide_stable_member(adj, s) == is_stable(h, s));
        }
    }
}

TEST_CASE("encoded decisions match the ground truth on random 5-argument systems",
          "[encodings]") {
    for (std::uint64_t seed = 60; seed < 72; ++seed) {
        auto h = gen_random(5, 0.4, seed);
        auto tab = encode_tab(h, Semantics::preferred);
        auto ttp = truth_table(h, Semantics::preferred);
        auto tts = truth_table(h, Semantics::stable);
        auto adj = encode_adjacency(h);
        for (unsigned mask = 0; mask < 32; ++mask) {
            auto s = h.set_of(mask);
            CAPTURE(seed, mask);
            REQUIRE(decide_tab(tab, s) == is_preferred(h, s));
            REQUIRE(decide_truth_table(ttp, s) == is_preferred(h, s));
            REQUIRE(decide_truth_table(tts, s) == is_stable(h, s));
            REQUIRE(decide_stable_member(adj, s) == is_stable(h, s));
        }
    }
}

TEST_CASE("container round trip and rejection of malformed input", "[encodings]") {
    auto h = gen_random(5, 0.5, 77);
    for (auto e : {encode_tab(h, Semantics::preferred), encode_adjacency(h),
                   truth_table(h, Semantics::stable)}) {
        auto bytes = container_bytes(e);
        std::istringstream in(bytes);
        auto back = read_encoding(in);
        REQUIRE(back.scheme == e.scheme);
        REQUIRE(back.semantics == e.semantics);
        REQUIRE(back.n == e.n);
        REQUIRE(back.row_count == e.row_count);
        REQUIRE(back.payload == e.payload);
        REQUIRE(container_bytes(back) == bytes);
    }

    auto good = container_bytes(encode_adjacency(h));
    auto expect_reject = [](std::string bytes) {
        std::istringstream in(bytes);
        REQUIRE_THROWS_AS(read_encoding(in), ParseError);
    };
    auto bad_magic = good;
    bad_magic[0] = 'X';
    expect_reject(bad_magic);
    auto bad_version = good;
    bad_version[5] = 0x02;
    expect_reject(bad_version);
    auto bad_scheme = good;
    bad_scheme[6] = 0x04;  // dnf has no container byte
    expect_reject(bad_scheme);
    auto truncated = good.substr(0, good.size() - 1);
    expect_reject(truncated);
    auto trailing = good + "x";
    expect_reject(trailing);
    auto dirty_padding = good;
    dirty_padding.back() = static_cast<char>(dirty_padding.back() | 0x01);
    expect_reject(dirty_padding);

    REQUIRE_THROWS_AS(
        [&] {
            std::ostringstream out;
            write_encoding(encode_dnf(h, Semantics::preferred), out);
        }(),
        SchemeMismatch);
}

TEST_CASE("size_report shows the tab blow-up against adjacency", "[encodings]") {
    auto rows = size_report({{"k3(1)", gen_k3(1)}, {"k3(3)", gen_k3(3)}, {"iso(5)", gen_isolated(5)}},
                            Semantics::preferred);
    auto find = [&](const std::string& label, Scheme scheme) {
        for (const auto& r : rows)
            if (r.label == label && r.scheme == scheme) return r;
        FAIL("row not found");
        return rows[0];
    };
    REQUIRE(find("k3(3)", Scheme::tab).bits == 243);       // 9 * 27
    REQUIRE(find("k3(3)", Scheme::adjacency).bits == 81);  // 9^2
    REQUIRE(find("iso(5)", Scheme::tab).bits == 5);        // one row
    // table scan cost grows with the 3^t family, matrix cost only with n^2
    REQUIRE(find("k3(3)", Scheme::tab).steps > find("k3(1)", Scheme::tab).steps);
    REQUIRE(find("k3(3)", Scheme::adjacency).steps > 0);
    // identical runs report identical costs
    auto again = size_report({{"k3(3)", gen_k3(3)}}, Semantics::preferred);
    REQUIRE(again[0].steps == find("k3(3)", Scheme::tab).steps);
}
