#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace rtstdma {

using rng_engine = std::mt19937_64;

/// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-frame seed derived from (master seed, sweep point, scheme, frame).
/// Depends only on its arguments, so frames can run in any order and a
/// longer run reproduces the outcomes of a shorter one frame for frame.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point,
                                    std::uint64_t scheme, std::uint64_t frame) {
    std::uint64_t h = master;
    h = mix64(h ^ (0xa0761d6478bd642fULL + point));
    h = mix64(h ^ (0xe7037ed1a0b428dbULL + scheme));
    h = mix64(h ^ (0x8ebc6af09c88c6e3ULL + frame));
    return h;
}

/// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(rng_engine& rng, std::uint64_t n) {
    const std::uint64_t rem = (std::uint64_t{0} - n) % n;  // 2^64 mod n
    std::uint64_t x = rng();
    while (rem != 0 && x >= std::uint64_t{0} - rem) x = rng();
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_double(rng_engine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// k distinct values drawn uniformly from {1, ..., n}, returned ascending.
/// Partial Fisher-Yates; requires 0 <= k <= n.
inline std::vector<int> sample_without_replacement(rng_engine& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace rtstdma
