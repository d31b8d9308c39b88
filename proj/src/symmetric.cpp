#include "zkpoly/symmetric.hpp"

#include <bit>

#include "zkpoly/errors.hpp"

namespace zkpoly {

unsigned borrow_count(std::uint64_t n, std::uint64_t m) {
    if (m > n) throw Underflow("borrow_count: m > n");
    // Grade-school base-2 subtraction n - m, counting borrows.
    unsigned borrows = 0;
    unsigned carry = 0;
    while (m | carry) {
        const unsigned nb = unsigned(n & 1);
        const unsigned mb = unsigned(m & 1) + carry;
        carry = (nb < mb) ? 1 : 0;
        borrows += carry;
        n >>= 1;
        m >>= 1;
    }
    return borrows;
}

namespace {

// Inverse of an odd 64-bit value modulo 2^64 (Newton iteration).
std::uint64_t inv_odd(std::uint64_t a) {
    std::uint64_t x = a;
    for (int i = 0; i < 5; ++i) x *= 2 - a * x;
    return x;
}

}  // namespace

std::uint16_t binom_mod_2k(std::uint64_t n, std::uint64_t m, unsigned k) {
    if (m > n) throw Underflow("binom_mod_2k: m > n");
    if (k < 1 || k > 16) throw Error("binom_mod_2k: k must be in [1, 16]");
    if (m > n - m) m = n - m;

    std::uint64_t odd_num = 1, odd_den = 1;
    unsigned val = 0;
    for (std::uint64_t i = 1; i <= m; ++i) {
        std::uint64_t num = n - m + i, den = i;
        const unsigned zn = unsigned(std::countr_zero(num));
        const unsigned zd = unsigned(std::countr_zero(den));
        val += zn;
        val -= zd;
        odd_num *= num >> zn;
        odd_den *= den >> zd;
    }
    if (val >= k) return 0;
    const std::uint64_t odd = odd_num * inv_odd(odd_den);
    const std::uint64_t mask = (std::uint64_t(1) << k) - 1;
    return static_cast<std::uint16_t>((odd << val) & mask);
}

bool corollary_kummer_check(std::uint64_t n, std::uint64_t d) {
    if (d == 0 || (d & (d - 1)) != 0)
        throw NotPowerOfTwo("corollary_kummer_check: d must be a power of two");
    if (n < d) throw Underflow("corollary_kummer_check: n < d");
    const std::uint64_t q = n / d;
    return borrow_count(n, d) == unsigned(std::countr_zero(q));
}

WeightProfile::WeightProfile(unsigned n) : n_(n) {
    counts_.reserve(n + 1);
    BigInt c = 1;
    for (unsigned w = 0; w <= n; ++w) {
        counts_.push_back(c);
        c = c * (n - w) / (w + 1);
    }
}

}  // namespace zkpoly
