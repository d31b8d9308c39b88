#include "zkpoly/nonclassical.hpp"

#include <algorithm>
#include <bit>

#include "zkpoly/errors.hpp"

namespace zkpoly {

NCPoly::NCPoly(unsigned n, unsigned depth, std::uint32_t shift_num,
               std::vector<NCTerm> terms)
    : n_(n), depth_(depth), shift_num_(shift_num), terms_(std::move(terms)) {
    if (n < 1 || n > 30) throw Error("NCPoly: n must be in [1, 30]");
    if (depth < 1 || depth > 16) throw Error("NCPoly: depth must be in [1, 16]");
    if (shift_num_ >> depth_) throw Error("NCPoly: shift numerator out of range");
    std::sort(terms_.begin(), terms_.end());
    if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end())
        throw Error("NCPoly: duplicate term");
    unsigned max_level = 0;
    for (const NCTerm& t : terms_) {
        if (t.mask == 0 || (t.mask >> n_)) throw Error("NCPoly: bad term mask");
        if (t.level < 1 || t.level > depth_) throw Error("NCPoly: bad term level");
        max_level = std::max(max_level, t.level);
    }
    // Canonical depth: attained by a term, or by an odd shift.
    while (depth_ > 1 && max_level < depth_ && (shift_num_ & 1) == 0) {
        shift_num_ >>= 1;
        --depth_;
    }
}

unsigned NCPoly::degree() const {
    unsigned deg = 0;
    for (const NCTerm& t : terms_)
        deg = std::max(deg, unsigned(std::popcount(t.mask)) + t.level - 1);
    return deg;
}

std::uint32_t NCPoly::eval_num(std::uint32_t x) const {
    std::uint32_t acc = shift_num_;
    for (const NCTerm& t : terms_) {
        if ((t.mask & x) == t.mask) acc += std::uint32_t(1) << (depth_ - t.level);
    }
    return acc & ((std::uint32_t(1) << depth_) - 1);
}

Dyadic NCPoly::eval(std::uint32_t x) const {
    return {eval_num(x), depth_};
}

nlohmann::json NCPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const NCTerm& t : terms_) terms.push_back({{"mask", t.mask}, {"level", t.level}});
    return {{"n", n_}, {"depth", depth_}, {"shift_num", shift_num_},
            {"terms", std::move(terms)}};
}

NCPoly NCPoly::from_json(const nlohmann::json& j) {
    std::vector<NCTerm> terms;
    for (const auto& t : j.at("terms")) {
        terms.push_back({t.at("mask").get<std::uint32_t>(), t.at("level").get<unsigned>()});
    }
    return NCPoly(j.at("n").get<unsigned>(), j.at("depth").get<unsigned>(),
                  j.at("shift_num").get<std::uint32_t>(), std::move(terms));
}

NCPoly nc_from_ring(const RingPoly& p) {
    // Normal form of P(x)/2^k mod 1: interpolate the (multilinear) numerator
    // and split each coefficient into its bits; bit j of c_S contributes the
    // term x_S / 2^{k-j}.
    const std::vector<std::uint16_t> values = p.eval_all();
    const RingPoly numerator = mobius_interpolate(values, p.k(), p.n());
    std::vector<NCTerm> terms;
    std::uint32_t shift = 0;
    for (const auto& [mask, coeff] : numerator.coeffs()) {
        if (mask == 0) {
            shift = coeff;
            continue;
        }
        for (unsigned j = 0; j < p.k(); ++j) {
            if ((coeff >> j) & 1) terms.push_back({mask, p.k() - j});
        }
    }
    return NCPoly(p.n(), p.k(), shift, std::move(terms));
}

RingPoly nc_to_ring(const NCPoly& p, unsigned target_d) {
    std::vector<std::uint16_t> nums(std::size_t(1) << p.n());
    for (std::uint32_t x = 0; std::uint64_t(x) < nums.size(); ++x) {
        nums[x] = std::uint16_t(p.eval_num(x));
    }
    return mobius_interpolate(nums, p.depth(), target_d);
}

Agreement nc_boolean_agreement(const NCPoly& p, const BoolFn& f) {
    if (p.n() != f.n()) throw LengthMismatch("nc_boolean_agreement: variable counts differ");
    const std::uint32_t half = std::uint32_t(1) << (p.depth() - 1);
    std::uint64_t matches = 0;
    for (std::uint32_t x = 0; std::uint64_t(x) < f.size(); ++x) {
        const std::uint32_t target = f.get(x) ? half : 0;
        matches += (p.eval_num(x) == target);
    }
    return Agreement::of_counts(matches, f.size());
}

}  // namespace zkpoly
