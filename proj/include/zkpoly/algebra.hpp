#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zkpoly/ring_poly.hpp"

#include "json.hpp"

namespace zkpoly {

/// A set of input points, sorted and distinct.
struct PointSet {
    unsigned n = 0;
    std::vector<std::uint32_t> points;

    static PointSet of(unsigned n, std::vector<std::uint32_t> points);

    nlohmann::json to_json() const;
    static PointSet from_json(const nlohmann::json& j);
};

/// Generating set for the module of polynomials in P_{d,k} vanishing on all
/// points of S. Empty iff only the zero polynomial vanishes on S.
///
/// Z/2^k is a chain ring, so the kernel is peeled one bit at a time: unit
/// pivots are eliminated over F_2 first, the remaining all-even directions
/// are divided by two and the reduced system recursed on mod 2^{k-1},
/// terminating after k rounds.
std::vector<RingPoly> vanishing_basis(const PointSet& s, unsigned d, unsigned k,
                                      std::uint64_t max_entries = std::uint64_t(1) << 20);

/// True iff the only polynomial of P_{d,k} vanishing on every point of S is
/// the zero polynomial.
bool is_interpolating(const PointSet& s, unsigned d, unsigned k,
                      std::uint64_t max_entries = std::uint64_t(1) << 20);

/// True iff every polynomial of P_{d,k} vanishing on S has all coefficients
/// even (pi-trivial), checked on the generators of the vanishing module.
bool is_forcing(const PointSet& s, unsigned d, unsigned k,
                std::uint64_t max_entries = std::uint64_t(1) << 20);

/// Randomized probe of the forcing-set size bound: samples point sets of
/// every size below binom(n, <=d) and records any that is forcing (which
/// would indicate an implementation bug, not a false lemma).
struct ForcingProbeReport {
    unsigned n = 0, d = 0, k = 0, trials = 0;
    std::uint64_t seed = 0;
    struct Row {
        unsigned size = 0;
        unsigned trials = 0;
        unsigned forcing_found = 0;
    };
    std::vector<Row> rows;
    std::optional<PointSet> counterexample;
    bool all_non_forcing = true;

    nlohmann::json to_json() const;
};

ForcingProbeReport min_forcing_probe(unsigned n, unsigned d, unsigned k,
                                     unsigned trials, std::uint64_t seed);

}  // namespace zkpoly
