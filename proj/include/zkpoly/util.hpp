#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "zkpoly/bigint.hpp"

namespace zkpoly {

inline int popcount(std::uint32_t x) { return std::popcount(x); }

/// Number of worker threads to use: ZKPOLY_THREADS if set, else the
/// hardware concurrency, clamped to [1, 256].
unsigned worker_count();

/// binom(n, 0) + ... + binom(n, d), exactly.
BigInt binom_sum(unsigned n, unsigned d);

/// All variable-subset masks over n variables with popcount <= d, in the
/// canonical (popcount, mask value) order used for witness tie-breaking.
std::vector<std::uint32_t> monomial_masks(unsigned n, unsigned d);

/// Next larger integer with the same popcount (v != 0).
std::uint32_t next_same_popcount(std::uint32_t v);

/// Visits every superset of `mask` within n variables, including mask itself.
template <typename Fn>
void for_each_superset(std::uint32_t mask, unsigned n, Fn&& fn) {
    const std::uint32_t full = (n == 32) ? ~std::uint32_t(0)
                                         : ((std::uint32_t(1) << n) - 1);
    const std::uint32_t comp = full & ~mask;
    std::uint32_t t = 0;
    while (true) {
        fn(mask | t);
        if (t == comp) break;
        t = (t - comp) & comp;  // next subset of comp
    }
}

}  // namespace zkpoly
