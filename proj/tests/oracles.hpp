#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// exact big-integer binomials, a from-scratch gamma search, and a plain
// GF(2) rank. These freeze the expected values the implementation is
// checked against.

#include <cstdint>
#include <vector>

#include "zkpoly/agreement.hpp"
#include "zkpoly/bigint.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/ring_poly.hpp"
#include "zkpoly/util.hpp"

namespace oracles {

inline zkpoly::BigInt binom_exact(unsigned n, unsigned m) {
    if (m > n) return 0;
    zkpoly::BigInt v = 1;
    for (unsigned i = 0; i < m; ++i) {
        v *= n - i;
        v /= i + 1;
    }
    return v;
}

// Exhaustive gamma by plain per-point evaluation of every polynomial; no
// incremental state, no Gray codes, no bit tricks.
struct BruteGamma {
    std::uint64_t matches = 0;
    std::vector<std::uint16_t> coeffs;  // canonical (popcount, mask) order
};

inline BruteGamma brute_gamma(const zkpoly::BoolFn& f, unsigned d, unsigned k) {
    const auto masks = zkpoly::monomial_masks(f.n(), d);
    const std::uint64_t ring = std::uint64_t(1) << k;
    const std::uint16_t kmask = std::uint16_t(ring - 1);
    const auto lift = zkpoly::k_lift(f, k);

    std::vector<std::uint16_t> coeffs(masks.size(), 0);
    BruteGamma best;
    bool first = true;
    while (true) {
        std::uint64_t matches = 0;
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            std::uint32_t acc = 0;
            for (std::size_t i = 0; i < masks.size(); ++i) {
                if ((masks[i] & x) == masks[i]) acc += coeffs[i];
            }
            matches += ((acc & kmask) == lift.values[x]);
        }
        if (first || matches > best.matches ||
            (matches == best.matches && coeffs < best.coeffs)) {
            best = {matches, coeffs};
            first = false;
        }
        // Odometer in canonical order: the last coefficient is fastest, so
        // vectors are visited in increasing lexicographic order.
        std::size_t pos = masks.size();
        while (pos > 0 && coeffs[pos - 1] == kmask) coeffs[--pos] = 0;
        if (pos == 0) break;
        coeffs[pos - 1]++;
    }
    return best;
}

inline unsigned gf2_rank(std::vector<std::vector<int>> rows) {
    unsigned rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows.size(); ++c) {
        std::size_t pivot = row;
        while (pivot < rows.size() && !(rows[pivot][c] & 1)) pivot++;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != row && (rows[r][c] & 1)) {
                for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] ^= rows[row][cc];
            }
        }
        row++;
        rank++;
    }
    return rank;
}

}  // namespace oracles
