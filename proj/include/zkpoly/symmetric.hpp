#pragma once

#include <cstdint>
#include <vector>

#include "zkpoly/agreement.hpp"
#include "zkpoly/bigint.hpp"

namespace zkpoly {

/// Bit i of the Hamming weight value w.
inline int weight_bit(std::uint64_t w, unsigned i) {
    return i >= 64 ? 0 : int((w >> i) & 1);
}

/// Value of the degree-t elementary symmetric polynomial over F_2 at any
/// input of Hamming weight w: binom(w, t) mod 2, which by Lucas is the
/// product of the weight bits selected by t.
inline int elem_sym_mod2(std::uint64_t t, std::uint64_t w) {
    return (w & t) == t ? 1 : 0;
}

/// Number of borrows when subtracting m from n in base 2; by Kummer's
/// theorem this is the 2-adic valuation of binom(n, m). Throws Underflow
/// when m > n.
unsigned borrow_count(std::uint64_t n, std::uint64_t m);

/// binom(n, m) mod 2^k (k <= 16), via a 2-adic-valuation-tracked product:
/// odd parts multiply mod 2^64, the tracked power of two shifts in at the end.
std::uint16_t binom_mod_2k(std::uint64_t n, std::uint64_t m, unsigned k);

/// Checks the Kummer corollary for power-of-two d: the borrow count of
/// (n, d) equals the 2-adic valuation of floor(n/d).
bool corollary_kummer_check(std::uint64_t n, std::uint64_t d);

/// Exact binomial row: counts[w] = binom(n, w).
class WeightProfile {
public:
    explicit WeightProfile(unsigned n);
    unsigned n() const { return n_; }
    const BigInt& count(unsigned w) const { return counts_.at(w); }
    const std::vector<BigInt>& counts() const { return counts_; }

private:
    unsigned n_;
    std::vector<BigInt> counts_;
};

/// Agreement of two symmetric value functions, summed over weight classes:
/// matches = sum of binom(n, w) over w with value_a(w) == value_b(w), exact.
/// This is what lets Theorem-3.1-style agreements run at n in the thousands.
template <typename FnA, typename FnB>
Agreement weight_agreement(unsigned n, FnA&& value_a, FnB&& value_b) {
    WeightProfile profile(n);
    BigInt matches = 0;
    for (unsigned w = 0; w <= n; ++w) {
        if (value_a(w) == value_b(w)) matches += profile.count(w);
    }
    return Agreement(std::move(matches), big_pow2(n));
}

}  // namespace zkpoly
