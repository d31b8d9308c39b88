#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "zkpoly/agreement.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/ring_poly.hpp"

#include "json.hpp"

namespace zkpoly {

/// An exact dyadic rational num / 2^log_den in [0, 1). Torus values are never
/// floats; equality is the cross-shifted integer comparison.
struct Dyadic {
    std::uint32_t num = 0;
    unsigned log_den = 0;

    bool operator==(const Dyadic& o) const {
        return log_den >= o.log_den
                   ? num == (std::uint32_t(o.num) << (log_den - o.log_den))
                   : (std::uint32_t(num) << (o.log_den - log_den)) == o.num;
    }
};

struct NCTerm {
    std::uint32_t mask = 0;  // nonzero; the constant lives in the shift
    unsigned level = 1;      // term contributes x_mask / 2^level

    auto operator<=>(const NCTerm&) const = default;
};

/// A non-classical polynomial in normal form: shift A/2^depth plus a set of
/// monomial terms x_S / 2^level with 0/1 coefficients. Degree is
/// max(|S| + level - 1); depth is attained by a term or, for term-free
/// tails, by an odd shift (constructors canonicalize by halving an even
/// shift while no term reaches the depth). Depth-1 polynomials are classical.
class NCPoly {
public:
    NCPoly(unsigned n, unsigned depth, std::uint32_t shift_num,
           std::vector<NCTerm> terms);

    unsigned n() const { return n_; }
    unsigned depth() const { return depth_; }
    std::uint32_t shift_num() const { return shift_num_; }
    const std::vector<NCTerm>& terms() const { return terms_; }

    /// max over terms of popcount(mask) + level - 1; 0 when term-free.
    unsigned degree() const;

    /// Value at x: (shift_num + sum over terms with mask inside x of
    /// 2^{depth-level}) mod 2^depth, over 2^depth.
    Dyadic eval(std::uint32_t x) const;
    std::uint32_t eval_num(std::uint32_t x) const;

    bool operator==(const NCPoly& o) const = default;

    nlohmann::json to_json() const;
    static NCPoly from_json(const nlohmann::json& j);

private:
    unsigned n_, depth_;
    std::uint32_t shift_num_;
    std::vector<NCTerm> terms_;  // sorted
};

/// Normal form of P(x)/2^k mod 1: evaluates to eval(P, x)/2^k at every x and
/// has degree <= d + k - 1, depth <= k.
NCPoly nc_from_ring(const RingPoly& p);

/// Ring polynomial over Z/2^depth whose evaluations equal the numerators of
/// P: nc_eval(P,x) = a/2^depth iff eval(result, x) = a. Obtained by Moebius
/// interpolation of the numerator values; throws DegreeExceeded when the
/// interpolated degree exceeds target_d.
RingPoly nc_to_ring(const NCPoly& p, unsigned target_d);

/// Count of x where P(x) equals F(x)/2 exactly, over 2^n (Boolean functions
/// read as {0, 1/2}-valued torus maps).
Agreement nc_boolean_agreement(const NCPoly& p, const BoolFn& f);

}  // namespace zkpoly
