#include "doctest.h"

#include "zkpoly/constructions.hpp"
#include "zkpoly/errors.hpp"
#include "zkpoly/nonclassical.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/util.hpp"

using namespace zkpoly;

namespace {

RingPoly random_poly(unsigned n, unsigned k, unsigned d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RingPoly p(n, k, d);
    for (std::uint32_t mask : monomial_masks(n, d)) {
        p.set_coeff(mask, std::uint32_t(rng.next()) & p.modulus_mask());
    }
    return p;
}

}  // namespace

TEST_CASE("nc_eval basics") {
    // classical x1/2
    const NCPoly classical(1, 1, 0, {{1, 1}});
    CHECK(classical.eval(1) == Dyadic{1, 1});
    CHECK(classical.eval(0) == Dyadic{0, 1});
    CHECK(classical.depth() == 1);
    CHECK(classical.degree() == 1);

    // x1/4: degree 2, depth 2
    const NCPoly quarter(1, 2, 0, {{1, 2}});
    CHECK(quarter.eval(1) == Dyadic{1, 2});
    CHECK(quarter.eval(0) == Dyadic{0, 2});
    CHECK(quarter.degree() == 2);
    CHECK(quarter.depth() == 2);

    // constant shift 1/4
    const NCPoly shift_only(2, 2, 1, {});
    CHECK(shift_only.eval(0) == Dyadic{1, 2});
    CHECK(shift_only.eval(3) == Dyadic{1, 2});
    CHECK(shift_only.degree() == 0);
    CHECK(shift_only.depth() == 2);
}

TEST_CASE("canonical depth reduction") {
    // shift 2/4 with no depth-2 term is the classical constant 1/2
    const NCPoly half(2, 2, 2, {});
    CHECK(half.depth() == 1);
    CHECK(half.shift_num() == 1);

    // a level-1 term with an even shift also reduces
    const NCPoly reduced(2, 2, 2, {{1, 1}});
    CHECK(reduced.depth() == 1);

    // a level-2 term pins the depth
    const NCPoly pinned(2, 2, 2, {{1, 2}});
    CHECK(pinned.depth() == 2);
    CHECK(pinned.shift_num() == 2);

    CHECK_THROWS_AS(NCPoly(2, 2, 1, {{0, 1}}), Error);  // constants live in the shift
    CHECK_THROWS_AS(NCPoly(2, 2, 1, {{1, 3}}), Error);  // level above depth
    CHECK_THROWS_AS(NCPoly(2, 2, 4, {}), Error);        // shift out of range
}

TEST_CASE("Dyadic equality across denominators") {
    CHECK(Dyadic{1, 1} == Dyadic{2, 2});
    CHECK(Dyadic{2, 3} == Dyadic{1, 2});
    CHECK_FALSE(Dyadic{1, 2} == Dyadic{1, 1});
}

TEST_CASE("nc_from_ring stated examples") {
    // x1 over Z/4 evaluates to 1/4 at x=1
    RingPoly p(1, 2, 1);
    p.set_coeff(1, 1);
    const NCPoly nc = nc_from_ring(p);
    CHECK(nc.eval(1) == Dyadic{1, 2});
    CHECK(nc.eval(0) == Dyadic{0, 2});

    // 2x1 + x2 over Z/4: depth 2, degree <= d + k - 1 = 2, values match /4
    RingPoly q(2, 2, 1);
    q.set_coeff(0b01, 2);
    q.set_coeff(0b10, 1);
    const NCPoly ncq = nc_from_ring(q);
    CHECK(ncq.degree() <= 2);
    const auto vals = q.eval_all();
    for (std::uint32_t x = 0; x < 4; ++x) {
        CHECK(ncq.eval(x) == Dyadic{vals[x], 2});
    }

    // zero polynomial
    const NCPoly zero = nc_from_ring(RingPoly(3, 2, 1));
    CHECK(zero.terms().empty());
    CHECK(zero.shift_num() == 0);
    CHECK(zero.degree() == 0);
}

TEST_CASE("nc_to_ring stated examples") {
    // classical x1/2 -> x1 over Z/2
    const NCPoly classical(1, 1, 0, {{1, 1}});
    const RingPoly ring = nc_to_ring(classical, 1);
    CHECK(ring.k() == 1);
    CHECK(ring.coeff(1) == 1);
    CHECK(ring.coeffs().size() == 1);

    // x1/4 at target_d = 1 is accepted: its numerator is x1, degree 1
    const NCPoly quarter(1, 2, 0, {{1, 2}});
    CHECK(nc_to_ring(quarter, 1).coeff(1) == 1);

    // a depth-2 cross term overflows target_d = 1
    const NCPoly cross(2, 2, 0, {{0b11, 2}, {0b01, 1}});
    CHECK_THROWS_AS(nc_to_ring(cross, 1), DegreeExceeded);
    CHECK(nc_to_ring(cross, 2).degree() == 2);
}

TEST_CASE("round trips preserve values, degrees, and agreements") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + unsigned(rng.below(6));
        const unsigned d = unsigned(rng.below(std::min(n, 3u) + 1));
        const unsigned k = 1 + unsigned(rng.below(3));
        const RingPoly p = random_poly(n, k, d, rng.next());

        const NCPoly nc = nc_from_ring(p);
        CHECK(nc.degree() <= d + k - 1);
        const auto vals = p.eval_all();
        for (std::uint32_t x = 0; std::uint64_t(x) < vals.size(); ++x) {
            CHECK(nc.eval(x) == Dyadic{vals[x], k});
        }

        const RingPoly back = nc_to_ring(nc, d + k - 1);
        for (std::uint32_t x = 0; std::uint64_t(x) < vals.size(); ++x) {
            CHECK(back.eval(x) == nc.eval_num(x));
        }

        const BoolFn f = BoolFn::random(n, rng.next());
        const Agreement via_ring = agreement(k_lift(f, k), vals);
        const Agreement via_nc = nc_boolean_agreement(nc, f);
        CHECK(via_ring == via_nc);
    }
}

TEST_CASE("nc_boolean_agreement basics") {
    // a classical polynomial equal to F agrees everywhere
    BoolFn f(2);
    f.set(1, true);
    f.set(2, true);
    RingPoly p(2, 1, 1);
    p.set_coeff(1, 1);
    p.set_coeff(2, 1);
    const NCPoly nc = nc_from_ring(p);
    CHECK(nc_boolean_agreement(nc, f) == Agreement::of_counts(4, 4));

    // constant 1/4 never hits {0, 1/2}
    const NCPoly quarter(2, 2, 1, {});
    CHECK(nc_boolean_agreement(quarter, f) == Agreement::of_counts(0, 4));
}

TEST_CASE("the symmetric witness lifts to a depth-3 non-classical polynomial") {
    for (unsigned ell : {2u, 3u}) {
        const unsigned n = 1u << ell;
        const unsigned d = (1u << (ell - 1)) + (1u << (ell - 2));
        const NCPoly nc = nc_from_ring(sym_witness(n, ell));
        CHECK(nc.depth() == 3);
        CHECK(nc.degree() <= d + 2);
    }
}
