#include "zkpoly/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace zkpoly {

unsigned worker_count() {
    if (const char* env = std::getenv("ZKPOLY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 256u) : 1u;
}

BigInt binom_sum(unsigned n, unsigned d) {
    BigInt total = 0;
    BigInt term = 1;  // binom(n, 0)
    for (unsigned i = 0; i <= std::min(d, n); ++i) {
        total += term;
        term = term * (n - i) / (i + 1);
    }
    return total;
}

std::uint32_t next_same_popcount(std::uint32_t v) {
    const std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

std::vector<std::uint32_t> monomial_masks(unsigned n, unsigned d) {
    std::vector<std::uint32_t> masks{0};
    const std::uint32_t limit = std::uint32_t(1) << n;
    for (unsigned w = 1; w <= std::min(d, n); ++w) {
        for (std::uint32_t m = (std::uint32_t(1) << w) - 1; m < limit;
             m = next_same_popcount(m)) {
            masks.push_back(m);
        }
    }
    return masks;
}

}  // namespace zkpoly
