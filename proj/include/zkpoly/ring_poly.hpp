#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "json.hpp"

namespace zkpoly {

/// A multilinear polynomial of degree <= d with coefficients in Z/2^k
/// (1 <= k <= 16), stored sparsely: monomial masks map to coefficients in
/// [1, 2^k). Zero coefficients are never stored, so equality is a map
/// comparison; the degree bound d is part of the type, not of the identity.
class RingPoly {
public:
    static constexpr unsigned kMaxK = 16;
    static constexpr std::uint64_t kDefaultTableBudget = std::uint64_t(1) << 26;

    RingPoly(unsigned n, unsigned k, unsigned d);
    RingPoly(unsigned n, unsigned k, unsigned d,
             const std::map<std::uint32_t, std::uint16_t>& coeffs);

    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    unsigned d() const { return d_; }
    std::uint16_t modulus_mask() const {
        return static_cast<std::uint16_t>((std::uint32_t(1) << k_) - 1);
    }

    const std::map<std::uint32_t, std::uint16_t>& coeffs() const { return coeffs_; }
    std::uint16_t coeff(std::uint32_t mask) const;
    /// Reduces mod 2^k, drops zeros, enforces popcount(mask) <= d.
    void set_coeff(std::uint32_t mask, std::uint32_t value);

    bool is_zero() const { return coeffs_.empty(); }
    /// Largest popcount among stored masks (0 for the zero polynomial).
    unsigned degree() const;

    /// Sum of coeffs over stored masks contained in x, mod 2^k.
    std::uint16_t eval(std::uint32_t x) const;

    /// All 2^n evaluations by a subset-sum (zeta) transform, O(n 2^n).
    std::vector<std::uint16_t> eval_all(std::uint64_t table_budget = kDefaultTableBudget) const;

    /// Coefficientwise reduction mod 2: the projection homomorphism pi.
    RingPoly project_mod2() const;

    /// Equality ignores the degree bound d.
    bool operator==(const RingPoly& other) const {
        return n_ == other.n_ && k_ == other.k_ && coeffs_ == other.coeffs_;
    }

    nlohmann::json to_json() const;
    static RingPoly from_json(const nlohmann::json& j);

private:
    unsigned n_, k_, d_;
    std::map<std::uint32_t, std::uint16_t> coeffs_;
};

/// The unique multilinear polynomial over Z/2^k matching `values` at every
/// point of {0,1}^n (values.size() must be a power of two), via the Moebius
/// transform c_S = sum_{T subseteq S} (-1)^{|S|-|T|} values[1_T]. Throws
/// DegreeExceeded if any coefficient above degree d_max survives.
RingPoly mobius_interpolate(std::span<const std::uint16_t> values, unsigned k, unsigned d_max);

}  // namespace zkpoly
