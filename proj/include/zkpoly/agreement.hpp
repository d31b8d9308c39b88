#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zkpoly/bigint.hpp"
#include "zkpoly/boolfn.hpp"

#include "json.hpp"

namespace zkpoly {

/// An exact fraction matches/total. Totals are powers of two except for
/// agreements over restricted point sets, which carry the `restricted` marker.
/// Never a float; comparisons cross-multiply.
struct Agreement {
    BigInt matches;
    BigInt total;
    bool restricted = false;

    Agreement() : matches(0), total(1) {}
    Agreement(BigInt m, BigInt t, bool restr = false);

    static Agreement of_counts(std::uint64_t m, std::uint64_t t) {
        return Agreement(BigInt(m), BigInt(t));
    }

    double value() const;
    std::string str() const;  // "matches/total"

    /// Sign of a/b - c/d, exactly.
    static int compare(const Agreement& a, const Agreement& b);

    bool operator==(const Agreement& o) const { return compare(*this, o) == 0; }
    bool operator<(const Agreement& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Agreement& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Agreement& o) const { return compare(*this, o) > 0; }
    bool operator>=(const Agreement& o) const { return compare(*this, o) >= 0; }

    /// Exact comparison against the rational num/den.
    bool at_least(std::uint64_t num, std::uint64_t den) const {
        return matches * den >= BigInt(num) * total;
    }
    bool more_than(std::uint64_t num, std::uint64_t den) const {
        return matches * den > BigInt(num) * total;
    }

    nlohmann::json to_json() const;
};

/// A function {0,1}^n -> Z/2^k with values in {0, 2^{k-1}}: the k-lift.
struct LiftedFn {
    unsigned n;
    unsigned k;
    std::vector<std::uint16_t> values;
};

/// values[x] = 2^{k-1} * F(x).
LiftedFn k_lift(const BoolFn& f, unsigned k);

/// Exact count of coordinates where the two value vectors agree.
Agreement agreement(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b);

inline Agreement agreement(const LiftedFn& a, std::span<const std::uint16_t> b) {
    return agreement(std::span<const std::uint16_t>(a.values), b);
}

/// JSON helper: numbers up to 2^53 stay numbers, larger values become
/// decimal strings.
nlohmann::json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

}  // namespace zkpoly
