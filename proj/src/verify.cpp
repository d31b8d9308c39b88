#include "zkpoly/verify.hpp"

#include <algorithm>
#include <bit>

#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/symmetric.hpp"
#include "zkpoly/util.hpp"

namespace zkpoly {

int f_phi_psi(const BitPair& phi, const BitPair& psi, const FivePoint& p) {
    const bool a_flipped = (p.a1 != phi.first);
    const bool b_flipped = (p.b1 != psi.first);
    if (!a_flipped && !b_flipped) return 0;
    if (a_flipped && !b_flipped) return p.b2 ^ psi.second;
    if (!a_flipped && b_flipped) return p.a2 ^ phi.second;
    return p.z;
}

int RelevantPoly::eval(const FivePoint& p) const {
    const int basis[6] = {1, p.a1, p.a2, p.b1, p.b2, p.a1 & p.b1};
    int acc = 0;
    for (unsigned i = 0; i < 6; ++i) {
        if ((monomials >> i) & 1) acc ^= basis[i];
    }
    return acc;
}

std::vector<RelevantPoly> enumerate_relevant() {
    std::vector<RelevantPoly> out;
    out.reserve(64);
    for (unsigned q = 0; q < 64; ++q) out.push_back({std::uint8_t(q)});
    return out;
}

nlohmann::json RelLbdResult::to_json() const {
    return {{"max_agreement", max_agreement.to_json()},
            {"witness_q", witness_q.monomials},
            {"phi", {phi.first, phi.second}},
            {"psi", {psi.first, psi.second}}};
}

RelLbdResult verify_rel_lbd() {
    RelLbdResult best;
    best.max_agreement = Agreement::of_counts(0, 32);
    for (unsigned phi = 0; phi < 4; ++phi) {
        for (unsigned psi = 0; psi < 4; ++psi) {
            const BitPair phi_bits{int(phi & 1), int(phi >> 1)};
            const BitPair psi_bits{int(psi & 1), int(psi >> 1)};
            for (const RelevantPoly& q : enumerate_relevant()) {
                unsigned matches = 0;
                for (unsigned idx = 0; idx < 32; ++idx) {
                    const FivePoint p = FivePoint::from_index(idx);
                    matches += (f_phi_psi(phi_bits, psi_bits, p) == q.eval(p));
                }
                const Agreement agr = Agreement::of_counts(matches, 32);
                if (agr > best.max_agreement) {
                    best.max_agreement = agr;
                    best.witness_q = q;
                    best.phi = phi_bits;
                    best.psi = psi_bits;
                }
            }
        }
    }
    if (best.max_agreement.more_than(5, 8))
        throw Error("verify_rel_lbd: maximum exceeds 5/8, which contradicts the enumeration");
    return best;
}

bool verify_lem_main(unsigned ell, unsigned width) {
    if (ell < 2) throw Error("verify_lem_main: ell must be >= 2");
    if (width < ell + 2) throw Error("verify_lem_main: width must be >= ell + 2");
    const std::uint64_t d = (std::uint64_t(1) << (ell - 1)) + (std::uint64_t(1) << (ell - 2));
    for (std::uint64_t w = d; w < (std::uint64_t(1) << width); ++w) {
        const bool low_bit_clear = weight_bit(w, ell - 2) == 0;
        const bool pattern_1000 = ((w >> (ell - 2)) & 15) == 1;
        if (!low_bit_clear && !pattern_1000) continue;
        if (binom_mod_2k(w, d, 3) != 4 * weight_bit(w, ell)) return false;
    }
    return true;
}

namespace {

std::uint64_t binom_u64(unsigned n, unsigned r) {
    if (r > n) return 0;
    std::uint64_t v = 1;
    for (unsigned i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// All popcount-w subsets of [0, size) as masks, ascending.
std::vector<std::uint32_t> subsets_of_weight(unsigned size, unsigned w) {
    std::vector<std::uint32_t> out;
    if (w == 0) return {0};
    if (w > size) return {};
    const std::uint32_t limit = std::uint32_t(1) << size;
    for (std::uint32_t m = (std::uint32_t(1) << w) - 1; m < limit;
         m = next_same_popcount(m)) {
        out.push_back(m);
    }
    return out;
}

}  // namespace

Colouring::Colouring(unsigned size_i, unsigned size_j, unsigned i, unsigned j,
                     std::map<std::pair<std::uint32_t, std::uint32_t>, int> values)
    : size_i_(size_i), size_j_(size_j), i_(i), j_(j), values_(std::move(values)) {
    if (i > size_i || j > size_j) throw Error("Colouring: subset size exceeds ground set");
    const std::uint64_t cells = binom_u64(size_i, i) * binom_u64(size_j, j);
    if (values_.size() != cells)
        throw Error("Colouring: expected " + std::to_string(cells) + " cells, got " +
                    std::to_string(values_.size()));
    for (const auto& [key, colour] : values_) {
        if (unsigned(std::popcount(key.first)) != i_ || (key.first >> size_i_) ||
            unsigned(std::popcount(key.second)) != j_ || (key.second >> size_j_))
            throw Error("Colouring: bad cell key");
        if (colour != 0 && colour != 1) throw Error("Colouring: colours are bits");
    }
}

Colouring Colouring::constant(unsigned size_i, unsigned size_j, unsigned i,
                              unsigned j, int colour) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> values;
    for (std::uint32_t a : subsets_of_weight(size_i, i)) {
        for (std::uint32_t b : subsets_of_weight(size_j, j)) {
            values[{a, b}] = colour;
        }
    }
    return Colouring(size_i, size_j, i, j, std::move(values));
}

Colouring Colouring::random(unsigned size_i, unsigned size_j, unsigned i,
                            unsigned j, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> values;
    for (std::uint32_t a : subsets_of_weight(size_i, i)) {
        for (std::uint32_t b : subsets_of_weight(size_j, j)) {
            values[{a, b}] = int(rng.coin());
        }
    }
    return Colouring(size_i, size_j, i, j, std::move(values));
}

int Colouring::at(std::uint32_t subset_i, std::uint32_t subset_j) const {
    const auto it = values_.find({subset_i, subset_j});
    if (it == values_.end()) throw Error("Colouring: cell not present");
    return it->second;
}

Colouring Colouring::restricted(std::uint32_t keep_i, std::uint32_t keep_j) const {
    // Positions of set bits give the re-indexing of the kept elements.
    std::vector<unsigned> pos_i, pos_j;
    for (unsigned b = 0; b < size_i_; ++b)
        if ((keep_i >> b) & 1) pos_i.push_back(b);
    for (unsigned b = 0; b < size_j_; ++b)
        if ((keep_j >> b) & 1) pos_j.push_back(b);

    const auto expand = [](const std::vector<unsigned>& pos, std::uint32_t small) {
        std::uint32_t big = 0;
        for (unsigned b = 0; b < pos.size(); ++b) {
            if ((small >> b) & 1) big |= std::uint32_t(1) << pos[b];
        }
        return big;
    };

    std::map<std::pair<std::uint32_t, std::uint32_t>, int> values;
    for (std::uint32_t a : subsets_of_weight(unsigned(pos_i.size()), i_)) {
        for (std::uint32_t b : subsets_of_weight(unsigned(pos_j.size()), j_)) {
            values[{a, b}] = at(expand(pos_i, a), expand(pos_j, b));
        }
    }
    return Colouring(unsigned(pos_i.size()), unsigned(pos_j.size()), i_, j_,
                     std::move(values));
}

GridSearchResult find_monochromatic_grid(const Colouring& c, unsigned r,
                                         std::uint64_t budget) {
    if (r < c.i() || r < c.j())
        throw Error("find_monochromatic_grid: r must be >= i and j");
    const std::uint64_t pairs = binom_u64(c.size_i(), r) * binom_u64(c.size_j(), r);
    if (pairs > budget) throw BudgetExceeded(std::to_string(pairs));

    const auto rows = subsets_of_weight(c.size_i(), r);
    const auto cols = subsets_of_weight(c.size_j(), r);
    for (std::uint32_t keep_i : rows) {
        const auto cells_i = [&] {
            std::vector<std::uint32_t> v;
            for (std::uint32_t a : subsets_of_weight(c.size_i(), c.i())) {
                if ((a & keep_i) == a) v.push_back(a);
            }
            return v;
        }();
        for (std::uint32_t keep_j : cols) {
            int colour = -1;
            bool mono = true;
            for (std::uint32_t a : cells_i) {
                for (std::uint32_t b : subsets_of_weight(c.size_j(), c.j())) {
                    if ((b & keep_j) != b) continue;
                    const int v = c.at(a, b);
                    if (colour < 0) colour = v;
                    if (v != colour) {
                        mono = false;
                        break;
                    }
                }
                if (!mono) break;
            }
            if (mono) return {true, keep_i, keep_j, colour};
        }
    }
    return {};
}

bool epsilon_hard_check(const BoolFn& h, std::uint64_t d,
                        std::uint64_t eps_num, std::uint64_t eps_den,
                        const ShiftPair& phi, const ShiftPair& psi,
                        std::uint64_t budget) {
    if (h.n() % 2 != 0) throw Error("epsilon_hard_check: H must be on 2n variables");
    const unsigned n = h.n() / 2;
    if (h.n() > 6)
        throw CapacityError("epsilon_hard_check: full enumeration supports 2n <= 6");
    if (eps_den == 0) throw Error("epsilon_hard_check: eps denominator must be nonzero");

    const PointSet s = exception_set(n, d, phi, psi);
    if (s.points.empty()) return true;  // vacuous

    const unsigned deg = unsigned(3 * d - 1);
    const std::vector<std::uint32_t> masks = monomial_masks(h.n(), deg);
    const std::size_t m = masks.size();
    if (m >= 63 || (std::uint64_t(1) << m) > budget)
        throw BudgetExceeded((BigInt(1) << m).str());

    // k = 1 over at most 64 inputs: one word per polynomial state.
    std::vector<std::uint64_t> upset(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        for_each_superset(masks[m - 1 - j], h.n(), [&](std::uint32_t x) {
            upset[j] |= std::uint64_t(1) << x;
        });
    }
    std::uint64_t hbits = 0;
    for (std::uint32_t x = 0; std::uint64_t(x) < h.size(); ++x) {
        if (h.get(x)) hbits |= std::uint64_t(1) << x;
    }
    std::uint64_t smask = 0;
    for (std::uint32_t p : s.points) smask |= std::uint64_t(1) << p;

    const std::uint64_t set_size = s.points.size();
    const std::uint64_t total = std::uint64_t(1) << m;
    std::uint64_t state = 0;
    for (std::uint64_t c = 0;;) {
        const std::uint64_t agreed = std::popcount(~(state ^ hbits) & smask);
        const std::uint64_t two_gap =
            agreed * 2 >= set_size ? agreed * 2 - set_size : set_size - agreed * 2;
        if (two_gap * eps_den > 2 * eps_num * set_size) return false;
        if (++c == total) break;
        state ^= upset[std::countr_zero(c)];
    }
    return true;
}

}  // namespace zkpoly
