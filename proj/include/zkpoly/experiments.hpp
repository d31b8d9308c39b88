#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zkpoly/agreement.hpp"

#include "json.hpp"

namespace zkpoly {

/// Outcome of one named verifier: a pass flag plus a JSON evidence record.
struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json evidence;
};

/// Lemma 3.11 base case: full 16 x 64 x 32 enumeration; max must be 20/32.
CheckResult check_rel_lbd();

/// Borrow-count conclusion for ell in `ells`, widths ell + extra_width.
CheckResult check_lem_main(const std::vector<unsigned>& ells, unsigned extra_width);

/// All gamma facts over every Boolean function on n variables:
/// gamma_{1,k} = gamma_{1,1}, monotonicity in k, the collapse implication,
/// and gamma >= 1/2.
CheckResult check_gamma_facts(unsigned n, std::uint64_t budget);

/// borrow_count against the 2-adic valuation of exact Pascal-triangle
/// binomials, for all N < limit, M <= N.
CheckResult check_kummer(std::uint64_t limit);

/// elem_sym_mod2 against exact binomial parity for t < t_limit, w < w_limit.
CheckResult check_lucas(std::uint64_t t_limit, std::uint64_t w_limit);

/// Forcing probe at (n, d) for each k: random sets below the size bound are
/// never forcing; the radius-d ball is interpolating and forcing.
CheckResult check_forcing_probe(unsigned n, unsigned d, const std::vector<unsigned>& ks,
                                unsigned trials, std::uint64_t seed);

/// Random ring polynomials through the non-classical conversions: pointwise
/// values, degree bounds, and Boolean agreements are preserved exactly.
CheckResult check_nc_roundtrip(unsigned trials, std::uint64_t seed);

/// Monochromatic bi-grid search on random (1,1)-colourings; hits are counted,
/// misses are legitimate below the Ramsey threshold.
CheckResult check_ramsey_probe(unsigned size, unsigned r, unsigned trials,
                               std::uint64_t seed);

/// maj-bound experiment: exhaustive gamma of Maj_n over the feasible cells
/// against the 1/2 + 10d/sqrt(n) bound (exact integer comparison).
nlohmann::json experiment_maj_bound(std::uint64_t budget);

/// sym-sep experiment: exact lift agreement of the symmetric witness over a
/// range of n, plus heuristic gamma lower bounds where feasible.
nlohmann::json experiment_sym_sep(unsigned ell, const std::vector<unsigned>& ns,
                                  unsigned restarts, std::uint64_t seed);

/// quad-sep experiment: per random H, exact agreement of the quadratic
/// witness with the 2-lift of F_H against the exact S_d-overlap bound, and at
/// tiny sizes the exhaustive gamma_{3d-1,1}(F_H).
nlohmann::json experiment_quad_sep(unsigned n, std::uint64_t d, unsigned trials,
                                   std::uint64_t seed, std::uint64_t budget);

std::string csv_maj_bound(const nlohmann::json& report);
std::string csv_sym_sep(const nlohmann::json& report);
std::string csv_quad_sep(const nlohmann::json& report);

}  // namespace zkpoly
