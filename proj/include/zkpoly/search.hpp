#pragma once

#include <chrono>
#include <cstdint>

#include "zkpoly/agreement.hpp"
#include "zkpoly/bigint.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/ring_poly.hpp"

#include "json.hpp"

namespace zkpoly {

enum class GammaMode { exact, heuristic };

/// Result of a gamma search: the best agreement found, one witness attaining
/// it, and enough context to re-check both.
struct GammaResult {
    Agreement gamma;
    RingPoly witness;
    GammaMode mode = GammaMode::exact;
    BigInt search_space_size;
    std::chrono::duration<double> elapsed{0};

    /// Deterministic payload; elapsed time is deliberately not included.
    nlohmann::json to_json() const;
};

/// gamma_{d,k}(F) by exhaustive search over every coefficient assignment of
/// P_{d,k}, with the k-lift of F as the target. The witness returned is the
/// lexicographically smallest maximizer: coefficient vectors are read in
/// (popcount, mask value) order of monomials and compared entrywise.
///
/// Enumeration walks a base-2^k modular Gray code, so each step changes one
/// coefficient by +1 and touches only the 2^{n-|S|} affected evaluations.
/// Throws BudgetExceeded when (2^k)^{binom(n,<=d)} > budget.
GammaResult gamma_exact(const BoolFn& f, unsigned d, unsigned k,
                        std::uint64_t budget, unsigned threads = 0);

/// Coordinate-ascent lower bound on gamma_{d,k}(F). Restart 0 starts from the
/// zero polynomial, further restarts from seeded random polynomials; each pass
/// sets every coefficient to the value maximizing agreement (ties toward the
/// smaller value) until a full pass changes nothing.
GammaResult gamma_heuristic(const BoolFn& f, unsigned d, unsigned k,
                            unsigned restarts, std::uint64_t seed);

/// gamma_{d,k+1}(F) >= gamma_{d,k}(F), checked exhaustively.
bool gamma_monotone_check(const BoolFn& f, unsigned d, unsigned k, std::uint64_t budget);

/// Whenever gamma_{d,k}(F) > 1 - 2^{-d} it equals gamma_{d,1}(F); for d = 1
/// the two are equal unconditionally.
bool gamma_collapse_check(const BoolFn& f, unsigned d, unsigned k, std::uint64_t budget);

}  // namespace zkpoly
