#include "zkpoly/algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/util.hpp"

namespace zkpoly {

PointSet PointSet::of(unsigned n, std::vector<std::uint32_t> points) {
    if (n < 1 || n > 30) throw Error("PointSet: n must be in [1, 30]");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw Error("PointSet: duplicate points");
    if (!points.empty() && (points.back() >> n))
        throw Error("PointSet: point out of range");
    return PointSet{n, std::move(points)};
}

nlohmann::json PointSet::to_json() const {
    return {{"n", n}, {"points", points}};
}

PointSet PointSet::from_json(const nlohmann::json& j) {
    return of(j.at("n").get<unsigned>(), j.at("points").get<std::vector<std::uint32_t>>());
}

namespace {

using Vec = std::vector<std::uint32_t>;
using Matrix = std::vector<Vec>;

// Kernel basis of A over F_2 (entries are read mod 2): one vector per free
// column of the row-reduced system.
std::vector<Vec> kernel_mod2(const Matrix& a, std::size_t cols) {
    Matrix rows;
    std::vector<std::size_t> pivot_col;
    for (const Vec& src : a) {
        Vec row(cols);
        for (std::size_t c = 0; c < cols; ++c) row[c] = src[c] & 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (row[pivot_col[r]]) {
                for (std::size_t c = 0; c < cols; ++c) row[c] ^= rows[r][c];
            }
        }
        const auto lead = std::find(row.begin(), row.end(), 1u);
        if (lead == row.end()) continue;
        const std::size_t pc = std::size_t(lead - row.begin());
        // Clear this column from earlier rows to keep them reduced.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][pc]) {
                for (std::size_t c = 0; c < cols; ++c) rows[r][c] ^= row[c];
            }
        }
        rows.push_back(std::move(row));
        pivot_col.push_back(pc);
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : pivot_col) is_pivot[pc] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][f]) v[pivot_col[r]] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Generators of { x : A x = 0 mod 2^k }. Unit directions are found as the
// F_2 kernel; what remains is even, so it is halved and the augmented system
// [ (A V)/2 | A ] is recursed on mod 2^{k-1}. Runs for k rounds.
std::vector<Vec> kernel_mod_2k(const Matrix& a, std::size_t cols, unsigned k) {
    std::vector<Vec> v = kernel_mod2(a, cols);
    if (k == 1 || v.empty()) return v;

    const std::uint32_t mod = std::uint32_t(1) << k;
    const std::size_t t = v.size();

    Matrix b(a.size(), Vec(t + cols));
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t i = 0; i < t; ++i) {
            std::uint64_t dot = 0;
            for (std::size_t c = 0; c < cols; ++c) dot += std::uint64_t(a[r][c]) * v[i][c];
            b[r][i] = std::uint32_t((dot % mod) >> 1);  // A v is even mod 2^k
        }
        for (std::size_t c = 0; c < cols; ++c) b[r][t + c] = a[r][c] & ((mod >> 1) - 1);
    }

    std::vector<Vec> inner = kernel_mod_2k(b, t + cols, k - 1);

    std::vector<Vec> gens;
    for (const Vec& g : inner) {
        Vec x(cols, 0);
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t acc = std::uint64_t(g[t + c]) * 2;
            for (std::size_t i = 0; i < t; ++i) acc += std::uint64_t(g[i]) * v[i][c];
            x[c] = std::uint32_t(acc % mod);
        }
        if (std::any_of(x.begin(), x.end(), [](std::uint32_t e) { return e != 0; }))
            gens.push_back(std::move(x));
    }
    // 2^{k-1} V is in the kernel but not always in the image of the inner
    // parametrization; add it so the returned set generates.
    for (const Vec& vi : v) {
        Vec x(cols, 0);
        for (std::size_t c = 0; c < cols; ++c) x[c] = (vi[c] << (k - 1)) & (mod - 1);
        gens.push_back(std::move(x));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

}  // namespace

std::vector<RingPoly> vanishing_basis(const PointSet& s, unsigned d, unsigned k,
                                      std::uint64_t max_entries) {
    if (k < 1 || k > RingPoly::kMaxK) throw Error("vanishing_basis: k must be in [1, 16]");
    const std::vector<std::uint32_t> masks = monomial_masks(s.n, d);
    const std::uint64_t entries = std::uint64_t(masks.size()) * std::max<std::size_t>(s.points.size(), 1);
    if (masks.size() > max_entries || entries > max_entries)
        throw CapacityError("vanishing_basis: evaluation matrix of " +
                            std::to_string(entries) + " entries exceeds budget");

    Matrix a(s.points.size(), Vec(masks.size()));
    for (std::size_t r = 0; r < s.points.size(); ++r) {
        for (std::size_t c = 0; c < masks.size(); ++c) {
            a[r][c] = ((masks[c] & s.points[r]) == masks[c]) ? 1 : 0;
        }
    }

    std::vector<RingPoly> out;
    for (const Vec& g : kernel_mod_2k(a, masks.size(), k)) {
        RingPoly p(s.n, k, d);
        for (std::size_t c = 0; c < masks.size(); ++c) p.set_coeff(masks[c], g[c]);
        out.push_back(std::move(p));
    }
    return out;
}

bool is_interpolating(const PointSet& s, unsigned d, unsigned k, std::uint64_t max_entries) {
    return vanishing_basis(s, d, k, max_entries).empty();
}

bool is_forcing(const PointSet& s, unsigned d, unsigned k, std::uint64_t max_entries) {
    for (const RingPoly& g : vanishing_basis(s, d, k, max_entries)) {
        if (!g.project_mod2().is_zero()) return false;
    }
    return true;
}

nlohmann::json ForcingProbeReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const Row& r : rows) {
        rows_json.push_back({{"size", r.size}, {"trials", r.trials},
                             {"forcing_found", r.forcing_found}});
    }
    nlohmann::json j{{"n", n},       {"d", d},     {"k", k},
                     {"trials", trials}, {"seed", seed}, {"rows", std::move(rows_json)},
                     {"all_non_forcing", all_non_forcing}};
    if (counterexample) j["counterexample"] = counterexample->to_json();
    return j;
}

ForcingProbeReport min_forcing_probe(unsigned n, unsigned d, unsigned k,
                                     unsigned trials, std::uint64_t seed) {
    if (n > 5 || d > 2) throw CapacityError("min_forcing_probe: supported range is n <= 5, d <= 2");
    ForcingProbeReport report;
    report.n = n;
    report.d = d;
    report.k = k;
    report.trials = trials;
    report.seed = seed;

    const std::uint64_t bound = binom_sum(n, d).convert_to<std::uint64_t>();
    const std::uint64_t domain = std::uint64_t(1) << n;
    SplitMix64 rng(seed);
    for (std::uint64_t size = 0; size < bound; ++size) {
        ForcingProbeReport::Row row{unsigned(size), trials, 0};
        for (unsigned t = 0; t < trials; ++t) {
            std::set<std::uint32_t> picked;
            while (picked.size() < size) picked.insert(std::uint32_t(rng.below(domain)));
            const PointSet s = PointSet::of(n, {picked.begin(), picked.end()});
            if (is_forcing(s, d, k)) {
                row.forcing_found++;
                report.all_non_forcing = false;
                if (!report.counterexample) report.counterexample = s;
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace zkpoly
