#include "doctest.h"

#include "oracles.hpp"
#include "zkpoly/constructions.hpp"
#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/search.hpp"
#include "zkpoly/util.hpp"

using namespace zkpoly;

namespace {

constexpr std::uint64_t kBudget = std::uint64_t(1) << 33;

void check_against_brute(const BoolFn& f, unsigned d, unsigned k) {
    const GammaResult got = gamma_exact(f, d, k, kBudget);
    const oracles::BruteGamma want = oracles::brute_gamma(f, d, k);
    CHECK(got.gamma == Agreement::of_counts(want.matches, f.size()));
    const auto masks = monomial_masks(f.n(), d);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        CHECK(got.witness.coeff(masks[i]) == want.coeffs[i]);
    }
}

}  // namespace

TEST_CASE("gamma_exact on Maj_3 matches the stated values") {
    const BoolFn maj3 = majority(3);

    const GammaResult d0 = gamma_exact(maj3, 0, 1, kBudget);
    CHECK(d0.gamma == Agreement::of_counts(4, 8));
    CHECK(d0.witness.is_zero());  // constant 0 is the smaller of the two maximizers

    const GammaResult d1 = gamma_exact(maj3, 1, 1, kBudget);
    CHECK(d1.gamma == Agreement::of_counts(6, 8));

    // exact multilinear representation at d = n
    const GammaResult dn = gamma_exact(maj3, 3, 1, kBudget);
    CHECK(dn.gamma == Agreement::of_counts(8, 8));

    const GammaResult d0k2 = gamma_exact(maj3, 0, 2, kBudget);
    CHECK(d0k2.gamma == Agreement::of_counts(4, 8));
}

TEST_CASE("gamma_exact agrees with the brute-force oracle") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned n = 2 + unsigned(rng.below(3));
        const unsigned d = unsigned(rng.below(3));
        const unsigned k = 1 + unsigned(rng.below(2));
        check_against_brute(BoolFn::random(n, rng.next()), std::min(d, n), k);
    }
    // the three engines on identical instances
    check_against_brute(BoolFn::random(4, 555), 1, 1);  // bit engine
    check_against_brute(BoolFn::random(4, 555), 1, 2);  // 2-bit engine
    check_against_brute(BoolFn::random(4, 555), 1, 3);  // general engine
}

TEST_CASE("gamma_exact is independent of thread count and chunking") {
    const BoolFn f = BoolFn::random(4, 99);
    const GammaResult a = gamma_exact(f, 2, 2, kBudget, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        const GammaResult b = gamma_exact(f, 2, 2, kBudget, threads);
        CHECK(a.gamma == b.gamma);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("gamma_exact budget errors report the space size") {
    const BoolFn f = BoolFn::random(10, 3);
    CHECK_THROWS_AS(gamma_exact(f, 2, 2, 1000), BudgetExceeded);
    try {
        gamma_exact(f, 2, 2, 1000);
    } catch (const BudgetExceeded& e) {
        CHECK(e.space_size == (BigInt(1) << (2 * 56)).str());  // binom(10,<=2) = 56
    }
}

TEST_CASE("gamma witness reproduces gamma exactly") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const BoolFn f = BoolFn::random(3 + unsigned(rng.below(2)), rng.next());
        const unsigned d = unsigned(rng.below(3));
        const unsigned k = 1 + unsigned(rng.below(3));
        const GammaResult res = gamma_exact(f, d, k, kBudget);
        CHECK(res.gamma.at_least(1, 2));
        CHECK(agreement(k_lift(f, k), res.witness.eval_all()) == res.gamma);
    }
}

TEST_CASE("gamma_heuristic is a sound lower bound") {
    SplitMix64 rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const BoolFn f = BoolFn::random(4, rng.next());
        const unsigned d = unsigned(rng.below(3));
        const unsigned k = 1 + unsigned(rng.below(2));
        const GammaResult heur = gamma_heuristic(f, d, k, 4, rng.next());
        const GammaResult exact = gamma_exact(f, d, k, kBudget);
        CHECK(heur.gamma <= exact.gamma);
        // the reported witness really attains the reported agreement
        CHECK(agreement(k_lift(f, k), heur.witness.eval_all()) == heur.gamma);
    }
}

TEST_CASE("gamma_heuristic determinism") {
    const BoolFn f = BoolFn::random(5, 123);
    const GammaResult a = gamma_heuristic(f, 2, 2, 5, 77);
    const GammaResult b = gamma_heuristic(f, 2, 2, 5, 77);
    CHECK(a.gamma == b.gamma);
    CHECK(a.witness == b.witness);
}

TEST_CASE("gamma_heuristic reaches perfect agreement when an improving move always exists") {
    // F = x2 (a single variable): from the zero start each pass can raise the
    // match count with a single-coefficient move, so ascent ends at 1.
    BoolFn f(3);
    for (std::uint32_t x = 0; x < 8; ++x) f.set(x, (x >> 1) & 1);
    const GammaResult res = gamma_heuristic(f, 1, 1, 1, 5);
    CHECK(res.gamma == Agreement::of_counts(8, 8));

    // same for a monomial function x1*x2
    BoolFn g(3);
    for (std::uint32_t x = 0; x < 8; ++x) g.set(x, (x & 3) == 3);
    const GammaResult res2 = gamma_heuristic(g, 2, 1, 1, 5);
    CHECK(res2.gamma == Agreement::of_counts(8, 8));
}

TEST_CASE("gamma monotone and collapse checks") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const BoolFn f = BoolFn::random(4, rng.next());
        CHECK(gamma_monotone_check(f, 2, 1, kBudget));
        CHECK(gamma_collapse_check(f, 2, 2, kBudget));
    }
    // parity on 2 of 4 vars has gamma = 1 > 3/4 at d=2, k=2, and collapses
    BoolFn parity2(4);
    for (std::uint32_t x = 0; x < 16; ++x) parity2.set(x, ((x ^ (x >> 1)) & 1));
    const GammaResult g22 = gamma_exact(parity2, 2, 2, kBudget);
    CHECK(g22.gamma == Agreement::of_counts(16, 16));
    CHECK(gamma_collapse_check(parity2, 2, 2, kBudget));

    // constants are trivially monotone and collapsing
    BoolFn constant(3);
    CHECK(gamma_monotone_check(constant, 1, 2, kBudget));
    CHECK(gamma_collapse_check(constant, 1, 3, kBudget));
}

TEST_CASE("GammaResult JSON payload is deterministic and complete") {
    const GammaResult res = gamma_exact(majority(3), 1, 1, kBudget);
    const auto j = res.to_json();
    CHECK(j.at("gamma").at("matches") == 6);
    CHECK(j.at("gamma").at("total") == 8);
    CHECK(j.at("mode") == "exact");
    CHECK(j.at("search_space_size") == 16);
    CHECK(!j.contains("elapsed"));
    CHECK(j.dump() == gamma_exact(majority(3), 1, 1, kBudget).to_json().dump());
}
