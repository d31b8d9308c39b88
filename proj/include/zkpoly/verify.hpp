#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zkpoly/agreement.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/constructions.hpp"

#include "json.hpp"

namespace zkpoly {

/// One assignment to the five base-case variables.
struct FivePoint {
    std::uint8_t a1 = 0, a2 = 0, b1 = 0, b2 = 0, z = 0;

    static FivePoint from_index(unsigned idx) {
        return {std::uint8_t(idx & 1), std::uint8_t((idx >> 1) & 1),
                std::uint8_t((idx >> 2) & 1), std::uint8_t((idx >> 3) & 1),
                std::uint8_t((idx >> 4) & 1)};
    }
};

using BitPair = std::pair<int, int>;

/// The five-variable base-case function:
///   0               if a1 = phi1, b1 = psi1
///   b2 xor psi2     if a1 = 1 xor phi1, b1 = psi1
///   a2 xor phi2     if a1 = phi1, b1 = 1 xor psi1
///   z               otherwise.
int f_phi_psi(const BitPair& phi, const BitPair& psi, const FivePoint& p);

/// A linear combination of the monomials {1, a1, a2, b1, b2, a1*b1}; never
/// depends on z.
struct RelevantPoly {
    std::uint8_t monomials = 0;  // bit i selects basis element i, in the order above

    int eval(const FivePoint& p) const;
};

/// All 64 relevant polynomials, by increasing monomial subset.
std::vector<RelevantPoly> enumerate_relevant();

struct RelLbdResult {
    Agreement max_agreement;
    RelevantPoly witness_q;
    BitPair phi{0, 0}, psi{0, 0};

    nlohmann::json to_json() const;
};

/// Exhausts all 16 (phi,psi) x 64 relevant polynomials x 32 inputs and
/// returns the maximum agreement with one maximizer. The maximum is exactly
/// 20/32.
RelLbdResult verify_rel_lbd();

/// For every weight w in [d, 2^width) with d = 2^{ell-1} + 2^{ell-2}: if
/// |w|_{ell-2} = 0 or (|w|_{ell-2},...,|w|_{ell+1}) = (1,0,0,0), then
/// binom(w, d) mod 8 must equal 4*|w|_ell. True iff no violation.
bool verify_lem_main(unsigned ell, unsigned width);

/// An (i,j)-colouring of ([size_i], [size_j]): one bit per pair of an
/// i-subset of I and a j-subset of J (subsets encoded as bit masks).
class Colouring {
public:
    Colouring(unsigned size_i, unsigned size_j, unsigned i, unsigned j,
              std::map<std::pair<std::uint32_t, std::uint32_t>, int> values);

    static Colouring constant(unsigned size_i, unsigned size_j, unsigned i,
                              unsigned j, int colour);
    static Colouring random(unsigned size_i, unsigned size_j, unsigned i,
                            unsigned j, std::uint64_t seed);

    unsigned size_i() const { return size_i_; }
    unsigned size_j() const { return size_j_; }
    unsigned i() const { return i_; }
    unsigned j() const { return j_; }
    int at(std::uint32_t subset_i, std::uint32_t subset_j) const;

    /// The colouring induced on (I', J'), cells re-indexed to the positions
    /// of the kept elements.
    Colouring restricted(std::uint32_t keep_i, std::uint32_t keep_j) const;

private:
    unsigned size_i_, size_j_, i_, j_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> values_;
};

struct GridSearchResult {
    bool found = false;
    std::uint32_t subset_i = 0, subset_j = 0;
    int colour = 0;
};

/// Brute-force search for r-subsets I' of I and J' of J on which the
/// colouring restricts to a constant; first hit in increasing (mask_i,
/// mask_j) order, or not-found. Existence is only guaranteed above the
/// Ramsey threshold, so NotFound is an ordinary outcome.
GridSearchResult find_monochromatic_grid(const Colouring& c, unsigned r,
                                         std::uint64_t budget = std::uint64_t(1) << 24);

/// True iff every F_2 polynomial of degree <= 3d-1 on 2n variables has
/// restricted agreement with H on S_{Phi,Psi} within eps (= eps_num/eps_den)
/// of 1/2, exactly. Throws BudgetExceeded when there are more than `budget`
/// polynomials to enumerate.
bool epsilon_hard_check(const BoolFn& h, std::uint64_t d,
                        std::uint64_t eps_num, std::uint64_t eps_den,
                        const ShiftPair& phi, const ShiftPair& psi,
                        std::uint64_t budget);

}  // namespace zkpoly
