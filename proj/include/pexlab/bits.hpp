#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "pexlab/errors.hpp"

namespace pexlab {

inline constexpr int kMaxArgs = 64;

// Mask of the n lowest bits, n in [0, 64].
inline std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline int popcount(std::uint64_t v) { return std::popcount(v); }

// Characteristic string b_1...b_n of a subset mask (bit j-1 holds x_j).
inline std::string characteristic_string(std::uint64_t bits, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((bits >> j) & 1) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

// Canonical subset order: ascending lexicographic on characteristic strings,
// i.e. compare b_1 first. This is NOT numeric order of the masks.
inline bool lex_less(std::uint64_t a, std::uint64_t b, int n) {
    for (int j = 0; j < n; ++j) {
        auto ba = (a >> j) & 1, bb = (b >> j) & 1;
        if (ba != bb) return ba < bb;
    }
    return false;
}

// A bit sequence with MSB-first byte packing, as used by the PEENC container.
class BitString {
public:
    BitString() = default;

    explicit BitString(const std::vector<bool>& bits) {
        for (bool b : bits) push_back(b);
    }

    void push_back(bool bit) {
        if (size_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
        ++size_;
    }

    bool operator[](std::size_t i) const {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    // Rebuilds from packed bytes; rejects nonzero padding so that equal
    // payloads are byte-identical.
    static BitString from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count) {
        if (bytes.size() != (bit_count + 7) / 8)
            throw ParseError("bit payload has wrong byte length");
        if (bit_count % 8 != 0 && !bytes.empty()) {
            std::uint8_t pad = static_cast<std::uint8_t>(bytes.back() << (bit_count % 8));
            if (pad != 0) throw ParseError("bit payload has nonzero padding");
        }
        BitString out;
        out.bytes_ = bytes;
        out.size_ = bit_count;
        return out;
    }

    friend bool operator==(const BitString& a, const BitString& b) {
        return a.size_ == b.size_ && a.bytes_ == b.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

// splitmix64; fixed as the project-wide PRNG so that generated corpora are
// bit-identical across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Bernoulli(p) via "output < floor(p * 2^64)", saturating at p = 1.
    bool chance(double p) {
        std::uint64_t out = next();
        double scaled = p * 18446744073709551616.0;  // p * 2^64
        if (scaled >= 18446744073709551616.0) return true;
        return out < static_cast<std::uint64_t>(scaled);
    }
};

// Runs fn(begin, end) over a partition of [0, count) on `threads` threads.
// Callers are responsible for order-insensitive aggregation.
inline void parallel_chunks(std::uint64_t count, int threads,
                            const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    auto t = static_cast<std::uint64_t>(threads);
    if (t > count) t = count;
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::uint64_t chunk = (count + t - 1) / t;
    for (std::uint64_t k = 0; k < t; ++k) {
        std::uint64_t begin = k * chunk;
        std::uint64_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        pool.emplace_back(fn, begin, end);
    }
    for (auto& th : pool) th.join();
}

namespace detail {

// Search node accounting for ops with an optional budget (0 = unlimited).
struct NodeCounter {
    std::uint64_t budget = 0;
    std::uint64_t used = 0;

    void tick() {
        if (budget != 0 && ++used > budget)
            throw BudgetExceeded("search node budget exceeded (" + std::to_string(budget) + ")");
    }
};

}  // namespace detail
}  // namespace pexlab
