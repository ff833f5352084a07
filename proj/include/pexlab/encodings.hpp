#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/bits.hpp"
#include "pexlab/formula.hpp"
#include "pexlab/semantics.hpp"

namespace pexlab {

inline constexpr int kTruthTableCap = 20;  // 2^n payload bits

enum class Scheme : std::uint8_t {
    tab = 1,
    truthtable = 2,
    adjacency = 3,
    dnf = 4,  // formula-backed; has no container representation
};

inline const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::tab: return "tab";
        case Scheme::truthtable: return "truthtable";
        case Scheme::adjacency: return "adjacency";
        case Scheme::dnf: return "dnf";
    }
    return "?";
}

inline std::optional<Scheme> scheme_from_string(const std::string& s) {
    if (s == "tab") return Scheme::tab;
    if (s == "truthtable") return Scheme::truthtable;
    if (s == "adjacency") return Scheme::adjacency;
    if (s == "dnf") return Scheme::dnf;
    return std::nullopt;
}

// A concrete encoding eta(H): scheme id, bit payload and enough metadata to
// run the scheme's decision procedure. dnf carries a formula instead of bits.
struct Encoding {
    Scheme scheme = Scheme::tab;
    Semantics semantics = Semantics::preferred;
    int n = 0;
    std::uint32_t row_count = 0;  // tab only, else 0
    BitString payload;
    std::optional<Formula> formula;  // dnf only

    std::size_t bit_size() const {
        return formula ? static_cast<std::size_t>(formula->literal_count()) : payload.size();
    }
};

// Row-per-extension table: bit (i-1)n + (j-1) is set iff x_j is in S_i, rows
// in canonical family order.
inline Encoding encode_tab(const ArgumentSystem& h, Semantics semantics,
                           const SearchLimits& limits = {}) {
    ExtensionFamily family = semantics == Semantics::stable ? enumerate_stable(h, limits)
                                                            : enumerate_preferred(h, limits);
    Encoding e;
    e.scheme = Scheme::tab;
    e.semantics = semantics;
    e.n = h.n();
    e.row_count = static_cast<std::uint32_t>(family.size());
    for (const auto& row : family.members)
        for (int j = 0; j < h.n(); ++j) e.payload.push_back(row.contains(j));
    return e;
}

namespace detail {

inline void require_scheme(const Encoding& e, Scheme expected) {
    if (e.scheme != expected)
        throw SchemeMismatch(std::string("expected a ") + to_string(expected) +
                             " encoding, got " + to_string(e.scheme));
}

}  // namespace detail

// Table look-up membership; O(n * r) bit comparisons. steps, when given,
// receives the number of bits actually examined.
inline bool decide_tab(const Encoding& e, const ArgSet& s, std::uint64_t* steps = nullptr) {
    detail::require_scheme(e, Scheme::tab);
    if (s.n != e.n)
        throw WidthMismatch("set width does not match encoding width");
    std::uint64_t examined = 0;
    bool found = false;
    for (std::uint32_t row = 0; row < e.row_count && !found; ++row) {
        bool match = true;
        for (int j = 0; j < e.n; ++j) {
            ++examined;
            if (e.payload[static_cast<std::size_t>(row) * e.n + j] != s.contains(j)) {
                match = false;
                break;
            }
        }
        found = match;
    }
    if (steps) *steps = examined;
    return found;
}

// The deterministic verifier Q: re-encode and compare bit-identically.
inline bool verify_tab(const Encoding& e, const ArgumentSystem& h) {
    if (e.scheme != Scheme::tab || e.n != h.n()) return false;
    Encoding fresh = encode_tab(h, e.semantics);
    return fresh.row_count == e.row_count && fresh.payload == e.payload;
}

// n^2-bit row-major adjacency matrix; bit n*i + j says argument i attacks
// argument j. The concise scheme for stable semantics.
inline Encoding encode_adjacency(const ArgumentSystem& h) {
    Encoding e;
    e.scheme = Scheme::adjacency;
    e.semantics = Semantics::stable;
    e.n = h.n();
    for (int i = 0; i < h.n(); ++i)
        for (int j = 0; j < h.n(); ++j) e.payload.push_back(h.attacks(i, j));
    return e;
}

// Stable membership decided from the matrix alone, polynomial in n. steps
// counts matrix reads plus per-argument verdicts.
inline bool decide_stable_member(const Encoding& e, const ArgSet& s, std::uint64_t* steps = nullptr) {
    detail::require_scheme(e, Scheme::adjacency);
    if (s.n != e.n)
        throw WidthMismatch("set width does not match encoding width");
    int n = e.n;
    std::vector<std::uint64_t> targets(static_cast<std::size_t>(n), 0);
    std::uint64_t examined = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ++examined;
            if (e.payload[static_cast<std::size_t>(i) * n + j])
                targets[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        }
    bool ok = true;
    std::uint64_t attacked = 0;
    for (int i = 0; i < n && ok; ++i) {
        ++examined;
        if (!s.contains(i)) continue;
        if (targets[static_cast<std::size_t>(i)] & s.bits) ok = false;  // internal conflict
        attacked |= targets[static_cast<std::size_t>(i)];
    }
    if (ok) {
        ++examined;
        ok = (s.bits | attacked) == low_mask(n);
    }
    if (steps) *steps = examined;
    return ok;
}

// 2^n-bit indicator of f_H: bit at index sum 2^(j-1)[x_j in S] is set iff S
// is in the family.
inline Encoding truth_table(const ArgumentSystem& h, Semantics semantics,
                            const SearchLimits& limits = {}) {
    if (h.n() > kTruthTableCap)
        throw CapExceeded("truth table capped at n <= " + std::to_string(kTruthTableCap));
    ExtensionFamily family = semantics == Semantics::stable ? enumerate_stable(h, limits)
                                                            : enumerate_preferred(h, limits);
    std::vector<bool> bits(std::size_t{1} << h.n(), false);
    for (const auto& m : family.members) bits[m.bits] = true;
    Encoding e;
    e.scheme = Scheme::truthtable;
    e.semantics = semantics;
    e.n = h.n();
    e.payload = BitString(bits);
    return e;
}

inline bool decide_truth_table(const Encoding& e, const ArgSet& s, std::uint64_t* steps = nullptr) {
    detail::require_scheme(e, Scheme::truthtable);
    if (s.n != e.n)
        throw WidthMismatch("set width does not match encoding width");
    if (steps) *steps = static_cast<std::uint64_t>(e.n) + 1;  // index build + one probe
    return e.payload[s.bits];
}

inline Encoding encode_dnf(const ArgumentSystem& h, Semantics semantics,
                           const SearchLimits& limits = {}) {
    Encoding e;
    e.scheme = Scheme::dnf;
    e.semantics = semantics;
    e.n = h.n();
    e.formula = dnf_formula(h, semantics, limits);
    return e;
}

// ---------------------------------------------------------------------------
// PEENC container: magic "PEENC", version 0x01, scheme byte, semantics byte,
// n and r as 32-bit big-endian, payload bits packed MSB-first and zero-padded
// to a byte boundary.
// ---------------------------------------------------------------------------

inline constexpr char kEncodingMagic[5] = {'P', 'E', 'E', 'N', 'C'};
inline constexpr std::uint8_t kEncodingVersion = 0x01;

namespace detail {

inline void put_u32_be(std::ostream& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.put(static_cast<char>((v >> shift) & 0xFF));
}

inline std::uint32_t get_u32_be(std::istream& in) {
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) {
        int c = in.get();
        if (c < 0) throw ParseError("encoding container truncated");
        v = (v << 8) | static_cast<std::uint32_t>(c);
    }
    return v;
}

inline std::size_t expected_payload_bits(Scheme scheme, int n, std::uint32_t r) {
    switch (scheme) {
        case Scheme::tab: return static_cast<std::size_t>(n) * r;
        case Scheme::truthtable: return std::size_t{1} << n;
        case Scheme::adjacency: return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        case Scheme::dnf: break;
    }
    throw SchemeMismatch("dnf encodings have no container representation");
}

}  // namespace detail

inline void write_encoding(const Encoding& e, std::ostream& out) {
    if (e.scheme == Scheme::dnf)
        throw SchemeMismatch("dnf encodings have no container representation");
    std::uint32_t r = e.scheme == Scheme::tab ? e.row_count : 0;
    if (e.payload.size() != detail::expected_payload_bits(e.scheme, e.n, r))
        throw Error("encoding payload has inconsistent bit length");
    out.write(kEncodingMagic, 5);
    out.put(static_cast<char>(kEncodingVersion));
    out.put(static_cast<char>(e.scheme));
    out.put(static_cast<char>(e.semantics == Semantics::preferred ? 0x01 : 0x02));
    detail::put_u32_be(out, static_cast<std::uint32_t>(e.n));
    detail::put_u32_be(out, r);
    const auto& bytes = e.payload.bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

inline Encoding read_encoding(std::istream& in) {
    char magic[5];
    in.read(magic, 5);
    if (in.gcount() != 5 || !std::equal(magic, magic + 5, kEncodingMagic))
        throw ParseError("bad encoding container magic");
    int version = in.get();
    if (version != kEncodingVersion) throw ParseError("unsupported encoding container version");
    int scheme_byte = in.get();
    if (scheme_byte < 1 || scheme_byte > 3) throw ParseError("unknown encoding scheme byte");
    int sem_byte = in.get();
    if (sem_byte != 0x01 && sem_byte != 0x02) throw ParseError("unknown semantics byte");
    Encoding e;
    e.scheme = static_cast<Scheme>(scheme_byte);
    e.semantics = sem_byte == 0x01 ? Semantics::preferred : Semantics::stable;
    std::uint32_t n = detail::get_u32_be(in);
    std::uint32_t r = detail::get_u32_be(in);
    if (n > static_cast<std::uint32_t>(kMaxArgs)) throw ParseError("encoding n exceeds engine cap");
    if (e.scheme == Scheme::truthtable && n > kTruthTableCap)
        throw ParseError("truth-table encoding n exceeds cap");
    if (e.scheme != Scheme::tab && r != 0)
        throw ParseError("row count must be zero for this scheme");
    if (e.scheme == Scheme::tab && r > (1u << 24))
        throw ParseError("tab row count implausibly large");
    e.n = static_cast<int>(n);
    e.row_count = r;
    std::size_t bits = detail::expected_payload_bits(e.scheme, e.n, r);
    std::vector<std::uint8_t> bytes((bits + 7) / 8);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
        throw ParseError("encoding container truncated");
    if (in.peek() != std::istream::traits_type::eof())
        throw ParseError("trailing bytes after encoding payload");
    e.payload = BitString::from_bytes(bytes, bits);
    return e;
}

// ---------------------------------------------------------------------------
// Size and decision-cost report over a batch of systems. The fixed query
// workload is: the empty set, each singleton, and the full argument set.
// ---------------------------------------------------------------------------

struct SizeReportRow {
    std::string label;
    int n = 0;
    Scheme scheme = Scheme::tab;
    Semantics semantics = Semantics::preferred;
    std::uint64_t bits = 0;
    std::uint32_t rows = 0;
    std::uint64_t steps = 0;  // total over the workload
};

inline std::vector<SizeReportRow> size_report(
    const std::vector<std::pair<std::string, ArgumentSystem>>& systems, Semantics semantics) {
    std::vector<SizeReportRow> out;
    for (const auto& entry : systems) {
        const std::string& label = entry.first;
        const ArgumentSystem& h = entry.second;
        std::vector<ArgSet> workload;
        workload.push_back(h.set_of(0));
        for (int i = 0; i < h.n(); ++i) workload.push_back(h.set_of(std::uint64_t{1} << i));
        workload.push_back(h.set_of(h.full_mask()));

        Encoding tab = encode_tab(h, semantics);
        Encoding adj = encode_adjacency(h);
        std::optional<Encoding> tt;
        if (h.n() <= kTruthTableCap) tt = truth_table(h, semantics);

        auto run = [&](const Encoding& e, auto&& decide) {
            SizeReportRow row;
            row.label = label;
            row.n = h.n();
            row.scheme = e.scheme;
            row.semantics = e.semantics;
            row.bits = e.payload.size();
            row.rows = e.row_count;
            for (const auto& q : workload) {
                std::uint64_t steps = 0;
                decide(e, q, &steps);
                row.steps += steps;
            }
            out.push_back(row);
        };
        run(tab, [](const Encoding& e, const ArgSet& q, std::uint64_t* s) {
            return decide_tab(e, q, s);
        });
        if (tt)
            run(*tt, [](const Encoding& e, const ArgSet& q, std::uint64_t* s) {
                return decide_truth_table(e, q, s);
            });
        run(adj, [](const Encoding& e, const ArgSet& q, std::uint64_t* s) {
            return decide_stable_member(e, q, s);
        });
    }
    return out;
}

}  // namespace pexlab
