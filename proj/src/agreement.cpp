#include "zkpoly/agreement.hpp"

#include "zkpoly/errors.hpp"

namespace zkpoly {

Agreement::Agreement(BigInt m, BigInt t, bool restr)
    : matches(std::move(m)), total(std::move(t)), restricted(restr) {
    if (matches < 0 || matches > total || total <= 0)
        throw Error("Agreement: need 0 <= matches <= total, total > 0");
    if (!restricted && !is_power_of_two(total))
        throw Error("Agreement: total must be a power of two");
}

double Agreement::value() const {
    return matches.convert_to<double>() / total.convert_to<double>();
}

std::string Agreement::str() const {
    return matches.str() + "/" + total.str();
}

int Agreement::compare(const Agreement& a, const Agreement& b) {
    const BigInt lhs = a.matches * b.total;
    const BigInt rhs = b.matches * a.total;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

nlohmann::json Agreement::to_json() const {
    nlohmann::json j{{"matches", big_to_json(matches)}, {"total", big_to_json(total)}};
    if (restricted) j["restricted"] = true;
    return j;
}

LiftedFn k_lift(const BoolFn& f, unsigned k) {
    if (k < 1 || k > 16) throw Error("k_lift: k must be in [1, 16]");
    LiftedFn out{f.n(), k, std::vector<std::uint16_t>(f.size(), 0)};
    const std::uint16_t hi = std::uint16_t(1) << (k - 1);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        if (f.get(static_cast<std::uint32_t>(x))) out.values[x] = hi;
    }
    return out;
}

Agreement agreement(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) {
    if (a.size() != b.size())
        throw LengthMismatch("agreement: vectors of length " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    std::uint64_t matches = 0;
    for (std::size_t i = 0; i < a.size(); ++i) matches += (a[i] == b[i]);
    return Agreement::of_counts(matches, a.size());
}

nlohmann::json big_to_json(const BigInt& v) {
    static const BigInt kJsonSafe = (BigInt(1) << 53);
    if (v >= 0 && v <= kJsonSafe) return v.convert_to<std::uint64_t>();
    return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::uint64_t>());
}

}  // namespace zkpoly
