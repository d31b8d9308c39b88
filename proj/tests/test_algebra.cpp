#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "zkpoly/algebra.hpp"
#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/util.hpp"

using namespace zkpoly;

namespace {

PointSet full_cube(unsigned n) {
    std::vector<std::uint32_t> pts(std::size_t(1) << n);
    std::iota(pts.begin(), pts.end(), 0);
    return PointSet::of(n, std::move(pts));
}

PointSet random_set(unsigned n, std::size_t size, SplitMix64& rng) {
    std::vector<std::uint32_t> pts;
    while (pts.size() < size) {
        const std::uint32_t p = std::uint32_t(rng.below(std::uint64_t(1) << n));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return PointSet::of(n, std::move(pts));
}

}  // namespace

TEST_CASE("vanishing_basis on the full cube is empty") {
    for (unsigned n : {2u, 3u, 4u}) {
        for (unsigned d : {0u, 1u, 2u}) {
            for (unsigned k : {1u, 2u, 3u}) {
                CHECK(vanishing_basis(full_cube(n), d, k).empty());
            }
        }
    }
}

TEST_CASE("vanishing_basis on the empty set contains the constant") {
    const PointSet empty = PointSet::of(1, {});
    const auto basis = vanishing_basis(empty, 0, 1);
    REQUIRE(!basis.empty());
    bool has_constant = false;
    for (const RingPoly& g : basis) {
        if (g.coeff(0) == 1 && g.coeffs().size() == 1) has_constant = true;
    }
    CHECK(has_constant);
}

TEST_CASE("the low-weight points form an interpolating set") {
    for (unsigned n : {3u, 4u, 5u, 6u}) {
        for (unsigned d : {0u, 1u, 2u}) {
            for (unsigned k : {1u, 2u, 3u}) {
                const PointSet ball = PointSet::of(n, monomial_masks(n, d));
                CHECK(vanishing_basis(ball, d, k).empty());
            }
        }
    }
}

TEST_CASE("any Hamming ball of radius d is interpolating") {
    SplitMix64 rng(7);
    for (unsigned n : {3u, 5u, 6u}) {
        for (unsigned d : {1u, 2u}) {
            const std::uint32_t center = std::uint32_t(rng.below(std::uint64_t(1) << n));
            std::vector<std::uint32_t> pts;
            for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x) {
                if (unsigned(std::popcount(x ^ center)) <= d) pts.push_back(x);
            }
            CHECK(is_interpolating(PointSet::of(n, std::move(pts)), d, 2));
        }
    }
}

TEST_CASE("vanishing_basis soundness: generators vanish on S") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 2 + unsigned(rng.below(4));
        const unsigned d = unsigned(rng.below(3));
        const unsigned k = 1 + unsigned(rng.below(3));
        const PointSet s = random_set(n, rng.below(std::uint64_t(1) << n), rng);
        for (const RingPoly& g : vanishing_basis(s, d, k)) {
            CHECK(!g.is_zero());
            for (std::uint32_t p : s.points) CHECK(g.eval(p) == 0);
        }
    }
}

TEST_CASE("completeness at k=1: vanishing count is 2^(m - rank)") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned n = 2 + unsigned(rng.below(3));
        const unsigned d = unsigned(rng.below(3));
        const PointSet s = random_set(n, rng.below(std::uint64_t(1) << n), rng);
        const auto masks = monomial_masks(n, d);

        std::vector<std::vector<int>> matrix;
        for (std::uint32_t p : s.points) {
            std::vector<int> row(masks.size());
            for (std::size_t c = 0; c < masks.size(); ++c)
                row[c] = ((masks[c] & p) == masks[c]) ? 1 : 0;
            matrix.push_back(std::move(row));
        }
        const unsigned rank = oracles::gf2_rank(matrix);

        // enumerate every polynomial over F2 and count the vanishing ones
        std::uint64_t vanishing = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t(1) << masks.size()); ++code) {
            bool ok = true;
            for (std::uint32_t p : s.points) {
                int acc = 0;
                for (std::size_t i = 0; i < masks.size(); ++i) {
                    if (((code >> i) & 1) && (masks[i] & p) == masks[i]) acc ^= 1;
                }
                if (acc) {
                    ok = false;
                    break;
                }
            }
            vanishing += ok;
        }
        CHECK(vanishing == std::uint64_t(1) << (masks.size() - rank));

        // and the library agrees on triviality
        CHECK(is_interpolating(s, d, 1) == (vanishing == 1));
    }
}

TEST_CASE("is_interpolating basics") {
    CHECK_FALSE(is_interpolating(PointSet::of(3, {}), 1, 2));

    // one point short of the dimension can never interpolate
    SplitMix64 rng(44);
    const std::uint64_t dim = binom_sum(5, 2).convert_to<std::uint64_t>();
    for (int trial = 0; trial < 10; ++trial) {
        const PointSet s = random_set(5, dim - 1, rng);
        CHECK_FALSE(is_interpolating(s, 2, 2));
    }
}

TEST_CASE("is_forcing basics") {
    // interpolating implies forcing
    for (unsigned k : {1u, 2u, 3u}) {
        const PointSet ball = PointSet::of(4, monomial_masks(4, 1));
        CHECK(is_interpolating(ball, 1, k));
        CHECK(is_forcing(ball, 1, k));
    }
    // the empty set is never forcing: the constant 1 vanishes vacuously
    CHECK_FALSE(is_forcing(PointSet::of(2, {}), 1, 2));
    CHECK_FALSE(is_forcing(PointSet::of(1, {}), 0, 1));
}

TEST_CASE("is_forcing is monotone under adding points") {
    SplitMix64 rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 3 + unsigned(rng.below(2));
        const unsigned d = 1 + unsigned(rng.below(2));
        const unsigned k = 1 + unsigned(rng.below(2));
        PointSet s = random_set(n, rng.below((std::uint64_t(1) << n) - 1), rng);
        if (!is_forcing(s, d, k)) continue;
        // add any missing point
        for (std::uint32_t p = 0; p < (std::uint32_t(1) << n); ++p) {
            if (std::find(s.points.begin(), s.points.end(), p) == s.points.end()) {
                auto grown = s.points;
                grown.push_back(p);
                CHECK(is_forcing(PointSet::of(n, std::move(grown)), d, k));
            }
        }
    }
}

TEST_CASE("forcing kernel generators match k=2 structure on a known set") {
    // On S = {00, 11} with d=1, k=2: x1 - x2 vanishes (as 1*x1 + 3*x2), an
    // odd-coefficient direction, so S is not forcing.
    const PointSet s = PointSet::of(2, {0b00, 0b11});
    CHECK_FALSE(is_forcing(s, 1, 2));
    bool found_odd = false;
    for (const RingPoly& g : vanishing_basis(s, 1, 2)) {
        if (!g.project_mod2().is_zero()) found_odd = true;
    }
    CHECK(found_odd);
}

TEST_CASE("min_forcing_probe finds nothing below the bound") {
    const ForcingProbeReport r1 = min_forcing_probe(4, 1, 2, 60, 7);
    CHECK(r1.all_non_forcing);
    CHECK(r1.rows.size() == 5);  // sizes 0..4
    for (const auto& row : r1.rows) CHECK(row.forcing_found == 0);

    const ForcingProbeReport r2 = min_forcing_probe(3, 0, 1, 50, 8);
    CHECK(r2.all_non_forcing);
    CHECK(r2.rows.size() == 1);  // only the empty set is below the bound

    const ForcingProbeReport r3 = min_forcing_probe(4, 1, 1, 60, 9);
    CHECK(r3.all_non_forcing);

    CHECK_THROWS_AS(min_forcing_probe(7, 1, 1, 5, 1), CapacityError);
}

TEST_CASE("PointSet validation") {
    CHECK_THROWS_AS(PointSet::of(2, {1, 1}), Error);
    CHECK_THROWS_AS(PointSet::of(2, {9}), Error);
    const PointSet s = PointSet::of(3, {5, 1, 2});
    CHECK(s.points == std::vector<std::uint32_t>{1, 2, 5});
}
