#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pexlab/af.hpp"
#include "pexlab/bits.hpp"

namespace pexlab {

namespace detail {

inline std::vector<std::string> xnames(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace detail

// t disjoint triangles with all six mutual attacks inside each: 3^t preferred
// extensions on 3t arguments, the extremal family for table encodings.
inline ArgumentSystem gen_k3(int t) {
    if (t < 1) throw Error("gen_k3 needs t >= 1");
    if (3 * t > kMaxArgs) throw CapExceeded("gen_k3(" + std::to_string(t) + ") exceeds 64 arguments");
    std::vector<std::pair<int, int>> attacks;
    for (int b = 0; b < t; ++b)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) attacks.emplace_back(3 * b + i, 3 * b + j);
    return ArgumentSystem(detail::xnames(3 * t), attacks);
}

// k arguments, no attacks: the unique preferred extension is everything.
inline ArgumentSystem gen_isolated(int k) {
    if (k < 0) throw Error("gen_isolated needs k >= 0");
    if (k > kMaxArgs) throw CapExceeded("gen_isolated(" + std::to_string(k) + ") exceeds 64 arguments");
    return ArgumentSystem(detail::xnames(k), {});
}

// Directed cycle x1 -> x2 -> ... -> xn -> x1; incoherent for odd n >= 3.
inline ArgumentSystem gen_cycle(int n) {
    if (n < 2) throw Error("gen_cycle needs n >= 2");
    if (n > kMaxArgs) throw CapExceeded("gen_cycle(" + std::to_string(n) + ") exceeds 64 arguments");
    std::vector<std::pair<int, int>> attacks;
    for (int i = 0; i < n; ++i) attacks.emplace_back(i, (i + 1) % n);
    return ArgumentSystem(detail::xnames(n), attacks);
}

// Each ordered pair (i,j), i != j, in sorted pair order, is included with
// probability p from one splitmix64 stream; bit-identical across platforms
// for fixed (n, p, seed).
inline ArgumentSystem gen_random(int n, double p, std::uint64_t seed) {
    if (n < 0 || n > kMaxArgs) throw CapExceeded("gen_random argument count out of range");
    if (!(p >= 0.0 && p <= 1.0)) throw Error("gen_random needs p in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> attacks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rng.chance(p)) attacks.emplace_back(i, j);
        }
    return ArgumentSystem(detail::xnames(n), attacks);
}

}  // namespace pexlab
