#include "doctest.h"

#include "oracles.hpp"
#include "zkpoly/constructions.hpp"
#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/symmetric.hpp"

using namespace zkpoly;

TEST_CASE("majority convention") {
    const BoolFn m1 = majority(1);
    CHECK_FALSE(m1.get(0));
    CHECK(m1.get(1));

    // even split goes to 0
    CHECK_FALSE(majority(2).get(0b01));
    CHECK_FALSE(majority(2).get(0b10));
    CHECK(majority(2).get(0b11));

    const BoolFn m3 = majority(3);
    for (std::uint32_t x = 0; x < 8; ++x) {
        CHECK(m3.get(x) == (std::popcount(x) >= 2));
    }

    for (unsigned n : {4u, 9u, 16u}) {
        const BoolFn m = majority(n);
        for (std::uint32_t x = 0; x < m.size(); ++x) {
            CHECK(m.get(x) == (2u * unsigned(std::popcount(x)) > n));
        }
    }
}

TEST_CASE("elem_sym_fn") {
    // t = 1 is parity
    const BoolFn parity = elem_sym_fn(4, 1);
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(parity.get(x) == (std::popcount(x) & 1));

    // t = 4, n = 5: value 1 exactly on weights 4 and 5
    const BoolFn s4 = elem_sym_fn(5, 4);
    for (std::uint32_t x = 0; x < 32; ++x) {
        const int w = std::popcount(x);
        CHECK(s4.get(x) == (w >= 4));
    }

    CHECK(elem_sym_fn(3, 2).get(0b011) == 1);  // binom(2,2) = 1
    CHECK_THROWS_AS(elem_sym_fn(3, 4), Error);
}

TEST_CASE("sym_witness") {
    const RingPoly p = sym_witness(4, 2);  // d = 3
    CHECK(p.k() == 3);
    CHECK(p.coeffs().size() == 4);
    for (const auto& [mask, c] : p.coeffs()) {
        CHECK(std::popcount(mask) == 3);
        CHECK(c == 1);
    }
    const auto vals = p.eval_all();
    CHECK(vals[0b1111] == 4);  // binom(4,3) mod 8
    CHECK(vals[0b0011] == 0);  // binom(2,3) = 0
    for (std::uint32_t x = 0; x < 16; ++x) {
        const unsigned w = unsigned(std::popcount(x));
        CHECK(vals[x] == (w < 3 ? 0 : binom_mod_2k(w, 3, 3)));
    }
    CHECK_THROWS_AS(sym_witness(2, 2), Error);
    CHECK_THROWS_AS(sym_witness(8, 1), Error);
}

TEST_CASE("sym_separation_agreement equals the expanded-table agreement") {
    for (unsigned n : {4u, 7u, 10u}) {
        const Agreement weighted = sym_separation_agreement(n, 2);
        const auto lift = k_lift(elem_sym_fn(n, 4), 3);
        const auto vals = sym_witness(n, 2).eval_all();
        CHECK(weighted == agreement(lift, vals));
    }
}

TEST_CASE("sym_separation_agreement lower bound from the two match conditions") {
    for (unsigned n : {16u, 64u, 256u}) {
        const unsigned ell = 2;
        const Agreement agr = sym_separation_agreement(n, ell);
        // the two Lemma conditions, counted independently over weights
        BigInt covered = 0;
        const WeightProfile profile(n);
        for (unsigned w = 0; w <= n; ++w) {
            const bool c1 = weight_bit(w, ell - 2) == 0;
            const bool c2 = ((w >> (ell - 2)) & 15) == 1;
            if (c1 || c2) covered += profile.count(w);
        }
        CHECK(agr.matches >= covered);
        CHECK(agr.at_least(1, 2));
    }
}

TEST_CASE("sym_separation_agreement vs Monte Carlo at n=64") {
    const Agreement exact = sym_separation_agreement(64, 2);
    SplitMix64 rng(555);
    const std::uint64_t samples = 1000000;
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const unsigned w = unsigned(std::popcount(rng.next()));
        const std::uint16_t lhs = w < 3 ? 0 : binom_mod_2k(w, 3, 3);
        hits += (lhs == 4 * weight_bit(w, 2));
    }
    const double p = exact.value();
    const double sigma = std::sqrt(p * (1 - p) / double(samples));
    CHECK(std::abs(double(hits) / double(samples) - p) <= 3 * sigma);
}

TEST_CASE("construct_f_h case table") {
    const unsigned n = 3;
    const std::uint64_t d = 1;
    const BoolFn h = BoolFn::random(2 * n, 17);
    const BoolFn f = construct_f_h(n, d, h);
    for (std::uint32_t z = 0; z < f.size(); ++z) {
        const std::uint32_t x = z & 7, y = z >> 3;
        const unsigned wx = unsigned(std::popcount(x)), wy = unsigned(std::popcount(y));
        const int sx = elem_sym_mod2(d, wx), sy = elem_sym_mod2(d, wy);
        int want;
        if (!sx && !sy)
            want = 0;
        else if (sx && !sy)
            want = elem_sym_mod2(2 * d, wy);
        else if (!sx && sy)
            want = elem_sym_mod2(2 * d, wx);
        else
            want = h.get(z);
        CHECK(int(f.get(z)) == want);
    }

    // n=2, d=1, x=(1,0), y=(0,0): S_1(x)=1, S_1(y)=0 -> S_2(y) = 0
    const BoolFn h2 = BoolFn::random(4, 3);
    const BoolFn f2 = construct_f_h(2, 1, h2);
    CHECK(f2.get(0b0001) == 0);

    CHECK_THROWS_AS(construct_f_h(3, 3, h), NotPowerOfTwo);
    CHECK_THROWS_AS(construct_f_h(1, 1, BoolFn::random(2, 1)), Error);
}

TEST_CASE("quad_witness expansion") {
    const RingPoly p = quad_witness(2, 1);
    CHECK(p.n() == 4);
    CHECK(p.k() == 2);
    CHECK(p.degree() == 2);
    CHECK(p.coeffs().size() == 4);  // (x1+x2)(y1+y2)

    // evaluations are binom(|x|,d) * binom(|y|,d) mod 4
    const auto vals = quad_witness(3, 1).eval_all();
    for (std::uint32_t z = 0; z < 64; ++z) {
        const unsigned wx = unsigned(std::popcount(z & 7));
        const unsigned wy = unsigned(std::popcount(z >> 3));
        CHECK(vals[z] == ((wx * wy) & 3));
    }
}

TEST_CASE("quad witness equals the 2-lift of F_H outside the S_d overlap") {
    SplitMix64 rng(18);
    for (unsigned n : {2u, 3u, 4u, 5u}) {
        for (const std::uint64_t d : {std::uint64_t(1), std::uint64_t(2)}) {
            if (2 * d > n) continue;
            const BoolFn h = BoolFn::random(2 * n, rng.next());
            const BoolFn f = construct_f_h(n, d, h);
            const auto lift = k_lift(f, 2);
            const auto vals = quad_witness(n, d).eval_all();
            const std::uint32_t xmask = (1u << n) - 1;
            for (std::uint32_t z = 0; z < f.size(); ++z) {
                const unsigned wx = unsigned(std::popcount(z & xmask));
                const unsigned wy = unsigned(std::popcount(z >> n));
                if (elem_sym_mod2(d, wx) && elem_sym_mod2(d, wy)) continue;
                CHECK(vals[z] == lift.values[z]);
            }
            // where the product is 2 mod 4, F_H is 1
            for (std::uint32_t z = 0; z < f.size(); ++z) {
                if (vals[z] == 2) CHECK(f.get(z));
            }
        }
    }
}

TEST_CASE("construct_f_h_general specializes and flips") {
    const unsigned n = 3;
    const std::uint64_t d = 1;
    const BoolFn h = BoolFn::random(2 * n, 23);

    const ShiftPair zero{SimpleShift::zero(0), SimpleShift::zero(0)};
    CHECK(construct_f_h_general(n, d, h, zero, zero) == construct_f_h(n, d, h));

    // Phi_1 = 1 swaps the first two cases at every input
    const ShiftPair phi_one{SimpleShift::one(0), SimpleShift::zero(0)};
    const BoolFn flipped = construct_f_h_general(n, d, h, phi_one, zero);
    const BoolFn plain = construct_f_h(n, d, h);
    const std::uint32_t xmask = (1u << n) - 1;
    for (std::uint32_t z = 0; z < plain.size(); ++z) {
        const unsigned wx = unsigned(std::popcount(z & xmask));
        const unsigned wy = unsigned(std::popcount(z >> n));
        const int sx = elem_sym_mod2(d, wx), sy = elem_sym_mod2(d, wy);
        // flipping Phi_1 exchanges the x-condition
        if (!sy) {
            const int want = sx ? 0 : elem_sym_mod2(2 * d, wy);
            CHECK(int(flipped.get(z)) == want);
        }
    }

    // output equals H exactly on the exception set
    const PointSet s = exception_set(n, d, phi_one, zero);
    for (std::uint32_t p : s.points) CHECK(flipped.get(p) == h.get(p));
}

TEST_CASE("exception_set counting") {
    // zero shifts, d=1: both halves odd parity -> exactly 2^{2n-2} points
    for (unsigned n : {2u, 3u, 4u}) {
        const ShiftPair zero{SimpleShift::zero(0), SimpleShift::zero(0)};
        const PointSet s = exception_set(n, 1, zero, zero);
        CHECK(s.points.size() == (std::size_t(1) << (2 * n - 2)));
    }

    // density near 1/4 at n=8, d=2
    const ShiftPair zero2{SimpleShift::zero(1), SimpleShift::zero(1)};
    const PointSet s = exception_set(8, 2, zero2, zero2);
    const double density = double(s.points.size()) / double(std::uint64_t(1) << 16);
    CHECK(std::abs(density - 0.25) <= 0.05);

    // flipped Phi_1 selects the complementary x-condition
    const ShiftPair one2{SimpleShift::one(1), SimpleShift::zero(1)};
    const PointSet s_flip = exception_set(8, 2, one2, zero2);
    for (std::uint32_t p : s_flip.points) {
        const unsigned wx = unsigned(std::popcount(p & 255));
        CHECK(elem_sym_mod2(2, wx) == 0);
    }
}

TEST_CASE("agr_restricted") {
    const BoolFn f = BoolFn::random(4, 31);
    const auto lift = k_lift(f, 1);
    const PointSet s = PointSet::of(4, {1, 3, 7, 9});
    const Agreement full = agr_restricted(f, lift.values, 1, s);
    CHECK(full.restricted);
    CHECK(full == Agreement(BigInt(4), BigInt(4), true));

    const PointSet single = PointSet::of(4, {5});
    const Agreement one = agr_restricted(f, lift.values, 1, single);
    CHECK(one.total == 1);
    CHECK((one.matches == 0 || one.matches == 1));

    CHECK_THROWS_AS(agr_restricted(f, lift.values, 1, PointSet::of(4, {})), Error);
}

TEST_CASE("restricted agreement of random H against a fixed polynomial concentrates") {
    // supports the epsilon-hardness picture: random H vs the zero polynomial
    // on the d=1 exception set stays near 1/2
    const unsigned n = 5;
    const ShiftPair zero{SimpleShift::zero(0), SimpleShift::zero(0)};
    const PointSet s = exception_set(n, 1, zero, zero);
    const std::vector<std::uint16_t> zeros(std::size_t(1) << (2 * n), 0);
    double sum = 0;
    unsigned within = 0;
    const unsigned seeds = 100;
    for (unsigned seed = 0; seed < seeds; ++seed) {
        const BoolFn h = BoolFn::random(2 * n, seed);
        const Agreement a = agr_restricted(h, zeros, 1, s);
        sum += a.value();
        if (std::abs(a.value() - 0.5) < 0.125) within++;
    }
    CHECK(std::abs(sum / seeds - 0.5) < 0.03);
    CHECK(within >= 90);
}
