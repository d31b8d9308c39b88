#include "zkpoly/constructions.hpp"

#include <bit>

#include "zkpoly/errors.hpp"
#include "zkpoly/symmetric.hpp"
#include "zkpoly/util.hpp"

namespace zkpoly {

namespace {

void require_power_of_two(std::uint64_t d, const char* who) {
    if (d == 0 || (d & (d - 1)) != 0)
        throw NotPowerOfTwo(std::string(who) + ": d must be a power of two");
}

unsigned log2_exact(std::uint64_t d) {
    return unsigned(std::countr_zero(d));
}

void check_shift(const SimpleShift& s, unsigned ell, const char* who) {
    if (s.ell != ell)
        throw Error(std::string(who) + ": shift is over " + std::to_string(s.ell) +
                    " weight bits, expected " + std::to_string(ell));
}

}  // namespace

SimpleShift SimpleShift::one(unsigned ell) {
    if (ell >= 6) throw Error("SimpleShift: ell must be < 6");
    const unsigned cells = 1u << ell;
    return {ell, cells == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << cells) - 1};
}

BoolFn majority(unsigned n) {
    BoolFn f(n);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (2u * unsigned(std::popcount(x)) > n) f.set(x, true);
    }
    return f;
}

BoolFn elem_sym_fn(unsigned n, std::uint64_t t) {
    if (t > n) throw Error("elem_sym_fn: t must be <= n");
    BoolFn f(n);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (elem_sym_mod2(t, unsigned(std::popcount(x)))) f.set(x, true);
    }
    return f;
}

RingPoly sym_witness(unsigned n, unsigned ell) {
    if (ell < 2) throw Error("sym_witness: ell must be >= 2");
    const unsigned d = (1u << (ell - 1)) + (1u << (ell - 2));
    if (d > n) throw Error("sym_witness: degree 2^{ell-1}+2^{ell-2} exceeds n");
    RingPoly p(n, 3, d);
    const std::uint32_t limit = std::uint32_t(1) << n;
    for (std::uint32_t m = (std::uint32_t(1) << d) - 1; m < limit;
         m = next_same_popcount(m)) {
        p.set_coeff(m, 1);
    }
    return p;
}

Agreement sym_separation_agreement(unsigned n, unsigned ell) {
    if (ell < 2) throw Error("sym_separation_agreement: ell must be >= 2");
    if ((std::uint64_t(1) << ell) > n)
        throw Error("sym_separation_agreement: need 2^ell <= n");
    const std::uint64_t d = (std::uint64_t(1) << (ell - 1)) + (std::uint64_t(1) << (ell - 2));
    return weight_agreement(
        n,
        [d](unsigned w) -> std::uint16_t {
            return w < d ? std::uint16_t(0) : binom_mod_2k(w, d, 3);
        },
        [ell](unsigned w) -> std::uint16_t {
            return std::uint16_t(4 * weight_bit(w, ell));
        });
}

BoolFn construct_f_h(unsigned n, std::uint64_t d, const BoolFn& h) {
    require_power_of_two(d, "construct_f_h");
    const unsigned ell = log2_exact(d);
    const ShiftPair z{SimpleShift::zero(ell), SimpleShift::zero(ell)};
    return construct_f_h_general(n, d, h, z, z);
}

RingPoly quad_witness(unsigned n, std::uint64_t d) {
    if (d > n) throw Error("quad_witness: d must be <= n");
    if (2 * n > 30) throw Error("quad_witness: 2n must be <= 30");
    RingPoly p(2 * n, 2, unsigned(2 * d));
    if (d == 0) {
        p.set_coeff(0, 1);
        return p;
    }
    const std::uint32_t limit = std::uint32_t(1) << n;
    const std::uint32_t first = (std::uint32_t(1) << d) - 1;
    for (std::uint32_t mx = first; mx < limit; mx = next_same_popcount(mx)) {
        for (std::uint32_t my = first; my < limit; my = next_same_popcount(my)) {
            p.set_coeff(mx | (my << n), 1);
        }
    }
    return p;
}

BoolFn construct_f_h_general(unsigned n, std::uint64_t d, const BoolFn& h,
                             const ShiftPair& phi, const ShiftPair& psi) {
    require_power_of_two(d, "construct_f_h_general");
    if (2 * d > n) throw Error("construct_f_h_general: need 2d <= n");
    if (h.n() != 2 * n) throw Error("construct_f_h_general: H must be on 2n variables");
    const unsigned ell = log2_exact(d);
    check_shift(phi.first, ell, "construct_f_h_general");
    check_shift(phi.second, ell, "construct_f_h_general");
    check_shift(psi.first, ell, "construct_f_h_general");
    check_shift(psi.second, ell, "construct_f_h_general");

    BoolFn f(2 * n);
    const std::uint32_t xmask = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t z = 0; z < f.size(); ++z) {
        const std::uint32_t x = z & xmask;
        const std::uint32_t y = z >> n;
        const unsigned wx = unsigned(std::popcount(x));
        const unsigned wy = unsigned(std::popcount(y));
        const int sx = elem_sym_mod2(d, wx);
        const int sy = elem_sym_mod2(d, wy);
        int value;
        if (sx == phi.first.at_weight(wx)) {
            if (sy == psi.first.at_weight(wy)) {
                value = 0;
            } else {
                value = elem_sym_mod2(2 * d, wx) ^ phi.second.at_weight(wx);
            }
        } else {
            if (sy == psi.first.at_weight(wy)) {
                value = elem_sym_mod2(2 * d, wy) ^ psi.second.at_weight(wy);
            } else {
                value = h.get(z);
            }
        }
        if (value) f.set(z, true);
    }
    return f;
}

PointSet exception_set(unsigned n, std::uint64_t d, const ShiftPair& phi,
                       const ShiftPair& psi) {
    require_power_of_two(d, "exception_set");
    if (2 * d > n) throw Error("exception_set: need 2d <= n");
    const unsigned ell = log2_exact(d);
    check_shift(phi.first, ell, "exception_set");
    check_shift(psi.first, ell, "exception_set");

    std::vector<std::uint32_t> points;
    const std::uint32_t xmask = (std::uint32_t(1) << n) - 1;
    const std::uint64_t size = std::uint64_t(1) << (2 * n);
    for (std::uint32_t z = 0; std::uint64_t(z) < size; ++z) {
        const unsigned wx = unsigned(std::popcount(z & xmask));
        const unsigned wy = unsigned(std::popcount(z >> n));
        if (elem_sym_mod2(d, wx) == (1 ^ phi.first.at_weight(wx)) &&
            elem_sym_mod2(d, wy) == (1 ^ psi.first.at_weight(wy))) {
            points.push_back(z);
        }
    }
    return PointSet::of(2 * n, std::move(points));
}

Agreement agr_restricted(const BoolFn& f, std::span<const std::uint16_t> values,
                         unsigned k, const PointSet& s) {
    if (s.points.empty()) throw Error("agr_restricted: point set must be non-empty");
    if (s.n != f.n()) throw LengthMismatch("agr_restricted: point set on wrong n");
    if (values.size() != f.size())
        throw LengthMismatch("agr_restricted: value vector has wrong length");
    const std::uint16_t hi = std::uint16_t(1) << (k - 1);
    std::uint64_t matches = 0;
    for (std::uint32_t p : s.points) {
        const std::uint16_t target = f.get(p) ? hi : 0;
        matches += (values[p] == target);
    }
    return Agreement(BigInt(matches), BigInt(s.points.size()), /*restricted=*/true);
}

}  // namespace zkpoly
