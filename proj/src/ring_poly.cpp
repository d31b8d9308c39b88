#include "zkpoly/ring_poly.hpp"

#include <bit>

#include "zkpoly/errors.hpp"

namespace zkpoly {

namespace {

void check_params(unsigned n, unsigned k) {
    if (n < 1 || n > 30) throw Error("RingPoly: n must be in [1, 30]");
    if (k < 1 || k > RingPoly::kMaxK) throw Error("RingPoly: k must be in [1, 16]");
}

}  // namespace

RingPoly::RingPoly(unsigned n, unsigned k, unsigned d) : n_(n), k_(k), d_(d) {
    check_params(n, k);
}

RingPoly::RingPoly(unsigned n, unsigned k, unsigned d,
                   const std::map<std::uint32_t, std::uint16_t>& coeffs)
    : RingPoly(n, k, d) {
    for (const auto& [mask, value] : coeffs) set_coeff(mask, value);
}

std::uint16_t RingPoly::coeff(std::uint32_t mask) const {
    const auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? 0 : it->second;
}

void RingPoly::set_coeff(std::uint32_t mask, std::uint32_t value) {
    if (mask >> n_) throw Error("RingPoly: monomial mask out of range");
    if (unsigned(std::popcount(mask)) > d_)
        throw Error("RingPoly: monomial exceeds degree bound");
    const std::uint16_t v = static_cast<std::uint16_t>(value & modulus_mask());
    if (v == 0)
        coeffs_.erase(mask);
    else
        coeffs_[mask] = v;
}

unsigned RingPoly::degree() const {
    unsigned deg = 0;
    for (const auto& [mask, value] : coeffs_)
        deg = std::max(deg, unsigned(std::popcount(mask)));
    return deg;
}

std::uint16_t RingPoly::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (const auto& [mask, value] : coeffs_) {
        if ((mask & x) == mask) acc += value;
    }
    return static_cast<std::uint16_t>(acc & modulus_mask());
}

std::vector<std::uint16_t> RingPoly::eval_all(std::uint64_t table_budget) const {
    const std::uint64_t size = std::uint64_t(1) << n_;
    if (size > table_budget)
        throw CapacityError("eval_all: 2^" + std::to_string(n_) +
                            " entries exceed the table budget");
    std::vector<std::uint16_t> out(size, 0);
    for (const auto& [mask, value] : coeffs_) out[mask] = value;
    const std::uint16_t kmask = modulus_mask();
    for (unsigned i = 0; i < n_; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << i;
        for (std::uint64_t x = 0; x < size; ++x) {
            if (x & bit) out[x] = static_cast<std::uint16_t>((out[x] + out[x ^ bit]) & kmask);
        }
    }
    return out;
}

RingPoly RingPoly::project_mod2() const {
    RingPoly out(n_, 1, d_);
    for (const auto& [mask, value] : coeffs_) out.set_coeff(mask, value & 1);
    return out;
}

nlohmann::json RingPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, value] : coeffs_) {
        terms.push_back({{"mask", mask}, {"coeff", value}});
    }
    return {{"n", n_}, {"k", k_}, {"d", d_}, {"terms", std::move(terms)}};
}

RingPoly RingPoly::from_json(const nlohmann::json& j) {
    RingPoly out(j.at("n").get<unsigned>(), j.at("k").get<unsigned>(),
                 j.at("d").get<unsigned>());
    std::int64_t prev_mask = -1;
    for (const auto& term : j.at("terms")) {
        const auto mask = term.at("mask").get<std::uint32_t>();
        const auto coeff = term.at("coeff").get<std::uint32_t>();
        if (std::int64_t(mask) <= prev_mask)
            throw Error("polynomial file: masks must be strictly increasing");
        if (coeff >> out.k())
            throw Error("polynomial file: coefficient out of range");
        prev_mask = mask;
        out.set_coeff(mask, coeff);
    }
    return out;
}

RingPoly mobius_interpolate(std::span<const std::uint16_t> values, unsigned k,
                            unsigned d_max) {
    if (values.empty() || std::popcount(values.size()) != 1)
        throw LengthMismatch("mobius_interpolate: length must be a power of two");
    const unsigned n = static_cast<unsigned>(std::countr_zero(values.size()));
    if (n < 1 || n > 30) throw Error("mobius_interpolate: bad length");
    if (k < 1 || k > RingPoly::kMaxK) throw Error("mobius_interpolate: bad k");

    const std::uint32_t kmask = (std::uint32_t(1) << k) - 1;
    std::vector<std::uint16_t> c(values.begin(), values.end());
    const std::uint64_t size = c.size();
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << i;
        for (std::uint64_t x = 0; x < size; ++x) {
            if (x & bit) c[x] = static_cast<std::uint16_t>((c[x] - c[x ^ bit]) & kmask);
        }
    }

    unsigned actual = 0;
    for (std::uint64_t mask = 0; mask < size; ++mask) {
        if (c[mask]) actual = std::max(actual, unsigned(std::popcount(mask)));
    }
    if (actual > d_max) throw DegreeExceeded(static_cast<int>(actual));

    RingPoly out(n, k, d_max);
    for (std::uint64_t mask = 0; mask < size; ++mask) {
        if (c[mask]) out.set_coeff(static_cast<std::uint32_t>(mask), c[mask]);
    }
    return out;
}

}  // namespace zkpoly
