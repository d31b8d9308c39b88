#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "zkpoly/agreement.hpp"
#include "zkpoly/algebra.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/ring_poly.hpp"

namespace zkpoly {

/// A linear combination of symmetric polynomials of degree < d = 2^ell,
/// represented semantically: such a function depends only on the low ell
/// weight bits, so it is a truth table over them. Bit w of `table_bits` is
/// the value at weight-bit pattern w.
struct SimpleShift {
    unsigned ell = 0;
    std::uint64_t table_bits = 0;

    static SimpleShift zero(unsigned ell) { return {ell, 0}; }
    static SimpleShift one(unsigned ell);

    /// Value at an input of Hamming weight w.
    int at_weight(std::uint64_t w) const {
        const std::uint64_t idx = ell ? (w & ((std::uint64_t(1) << ell) - 1)) : 0;
        return int((table_bits >> idx) & 1);
    }
};

using ShiftPair = std::pair<SimpleShift, SimpleShift>;

/// Maj_n(x) = 1 iff |x| > n/2 (strict; even split maps to 0).
BoolFn majority(unsigned n);

/// table[x] = S_t at x = binom(|x|, t) mod 2.
BoolFn elem_sym_fn(unsigned n, std::uint64_t t);

/// The all-ones symmetric polynomial of degree d = 2^{ell-1} + 2^{ell-2}
/// over Z/8: every degree-d monomial with coefficient 1. Evaluates to
/// binom(|x|, d) mod 8.
RingPoly sym_witness(unsigned n, unsigned ell);

/// Exact agreement between the 3-lift of S_{2^ell} and sym_witness at size n,
/// via weight classes (valueA(w) = binom(w,d) mod 8, valueB(w) = 4*|w|_ell),
/// so n may be in the thousands.
Agreement sym_separation_agreement(unsigned n, unsigned ell);

/// The F_H family on 2n variables (x = low n bits, y = high n bits), d a
/// power of two with 2d <= n:
///   0        if S_d(x) = S_d(y) = 0
///   S_2d(y)  if S_d(x) = 1, S_d(y) = 0
///   S_2d(x)  if S_d(x) = 0, S_d(y) = 1
///   H(x,y)   otherwise.
BoolFn construct_f_h(unsigned n, std::uint64_t d, const BoolFn& h);

/// The degree-2d product witness binom(|x|,d) * binom(|y|,d) over Z/4 on 2n
/// variables, fully expanded: coefficient 1 on every monomial choosing d
/// x-variables and d y-variables.
RingPoly quad_witness(unsigned n, std::uint64_t d);

/// The shifted family F_{H,Phi,Psi}; zero shifts recover construct_f_h.
BoolFn construct_f_h_general(unsigned n, std::uint64_t d, const BoolFn& h,
                             const ShiftPair& phi, const ShiftPair& psi);

/// S_{Phi,Psi}: all (x,y) with S_d(x) = 1 xor Phi_1(x) and
/// S_d(y) = 1 xor Psi_1(y).
PointSet exception_set(unsigned n, std::uint64_t d, const ShiftPair& phi,
                       const ShiftPair& psi);

/// Agreement between the k-lift of F and the value vector G restricted to S.
/// The denominator is |S|, so the result carries the `restricted` marker.
Agreement agr_restricted(const BoolFn& f, std::span<const std::uint16_t> values,
                         unsigned k, const PointSet& s);

}  // namespace zkpoly
