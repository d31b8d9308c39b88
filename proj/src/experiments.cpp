#include "zkpoly/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "zkpoly/algebra.hpp"
#include "zkpoly/bigint.hpp"
#include "zkpoly/boolfn.hpp"
#include "zkpoly/constructions.hpp"
#include "zkpoly/errors.hpp"
#include "zkpoly/nonclassical.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/search.hpp"
#include "zkpoly/symmetric.hpp"
#include "zkpoly/util.hpp"
#include "zkpoly/verify.hpp"

namespace zkpoly {

CheckResult check_rel_lbd() {
    const RelLbdResult r = verify_rel_lbd();
    const bool pass = r.max_agreement == Agreement::of_counts(20, 32);
    return {"rel-lbd", pass,
            {{"cases", 16 * 64 * 32}, {"result", r.to_json()}}};
}

CheckResult check_lem_main(const std::vector<unsigned>& ells, unsigned extra_width) {
    bool pass = true;
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned ell : ells) {
        const unsigned width = ell + extra_width;
        const bool ok = verify_lem_main(ell, width);
        pass = pass && ok;
        rows.push_back({{"ell", ell}, {"width", width}, {"pass", ok}});
    }
    return {"lem-main", pass, {{"rows", std::move(rows)}}};
}

CheckResult check_gamma_facts(unsigned n, std::uint64_t budget) {
    if (n > 4) throw CapacityError("check_gamma_facts: supported range is n <= 4");
    const std::uint64_t functions = std::uint64_t(1) << (std::uint64_t(1) << n);
    std::uint64_t point4_fail = 0, monotone_fail = 0, collapse_fail = 0, half_fail = 0;

    for (std::uint64_t code = 0; code < functions; ++code) {
        BoolFn f(n);
        for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, (code >> x) & 1);

        Agreement gamma[3][4];  // [d][k]
        for (unsigned d = 0; d <= 2; ++d) {
            for (unsigned k = 1; k <= 3; ++k) {
                gamma[d][k] = gamma_exact(f, d, k, budget).gamma;
                if (!gamma[d][k].at_least(1, 2)) half_fail++;
            }
        }
        if (!(gamma[1][2] == gamma[1][1] && gamma[1][3] == gamma[1][1])) point4_fail++;
        for (unsigned d = 0; d <= 2; ++d) {
            for (unsigned k = 1; k <= 2; ++k) {
                if (gamma[d][k + 1] < gamma[d][k]) monotone_fail++;
            }
        }
        for (unsigned d = 0; d <= 2; ++d) {
            const std::uint64_t pow_d = std::uint64_t(1) << d;
            for (unsigned k = 1; k <= 3; ++k) {
                const bool applies = (d == 1) || gamma[d][k].more_than(pow_d - 1, pow_d);
                if (applies && !(gamma[d][k] == gamma[d][1])) collapse_fail++;
            }
        }
    }

    const bool pass = !point4_fail && !monotone_fail && !collapse_fail && !half_fail;
    return {"gamma-facts", pass,
            {{"n", n},
             {"functions", functions},
             {"point4_failures", point4_fail},
             {"monotone_failures", monotone_fail},
             {"collapse_failures", collapse_fail},
             {"below_half_failures", half_fail}}};
}

CheckResult check_kummer(std::uint64_t limit) {
    std::uint64_t pairs = 0, failures = 0;
    std::vector<BigInt> row{1};  // Pascal row, exact
    for (std::uint64_t n = 0; n < limit; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (std::uint64_t m = n - 1; m >= 1; --m) row[m] += row[m - 1];
        }
        for (std::uint64_t m = 0; m <= n; ++m) {
            const unsigned oracle = unsigned(boost::multiprecision::lsb(row[m]));
            if (borrow_count(n, m) != oracle) failures++;
            pairs++;
        }
    }
    return {"kummer", failures == 0,
            {{"limit", limit}, {"pairs", pairs}, {"failures", failures}}};
}

CheckResult check_lucas(std::uint64_t t_limit, std::uint64_t w_limit) {
    std::uint64_t cases = 0, failures = 0;
    // Pascal rows, exact, truncated to the first t_limit columns.
    std::vector<BigInt> row(t_limit, 0);
    row[0] = 1;
    for (std::uint64_t w = 0; w < w_limit; ++w) {
        if (w > 0) {
            for (std::uint64_t t = std::min(w, t_limit - 1); t >= 1; --t)
                row[t] += row[t - 1];
        }
        for (std::uint64_t t = 0; t < t_limit; ++t) {
            const int oracle = int(row[t] & 1);
            if (elem_sym_mod2(t, w) != oracle) failures++;
            cases++;
        }
    }
    return {"lucas", failures == 0,
            {{"t_limit", t_limit}, {"w_limit", w_limit}, {"cases", cases},
             {"failures", failures}}};
}

CheckResult check_forcing_probe(unsigned n, unsigned d, const std::vector<unsigned>& ks,
                                unsigned trials, std::uint64_t seed) {
    bool pass = true;
    nlohmann::json per_k = nlohmann::json::array();
    const std::vector<std::uint32_t> ball = monomial_masks(n, d);  // radius-d ball at 0
    for (unsigned k : ks) {
        const ForcingProbeReport report = min_forcing_probe(n, d, k, trials, seed);
        const PointSet ball_set = PointSet::of(n, ball);
        const bool ball_interp = is_interpolating(ball_set, d, k);
        const bool ball_forcing = is_forcing(ball_set, d, k);
        const bool ok = report.all_non_forcing && ball_interp && ball_forcing;
        pass = pass && ok;
        per_k.push_back({{"k", k},
                         {"probe", report.to_json()},
                         {"ball_interpolating", ball_interp},
                         {"ball_forcing", ball_forcing}});
    }
    return {"forcing-probe", pass,
            {{"n", n}, {"d", d}, {"trials", trials}, {"seed", seed},
             {"per_k", std::move(per_k)}}};
}

CheckResult check_nc_roundtrip(unsigned trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::uint64_t failures = 0;
    for (unsigned trial = 0; trial < trials; ++trial) {
        const unsigned n = 1 + unsigned(rng.below(6));
        const unsigned d = unsigned(rng.below(std::min(n, 3u) + 1));
        const unsigned k = 1 + unsigned(rng.below(3));
        RingPoly p(n, k, d);
        for (std::uint32_t mask : monomial_masks(n, d)) {
            p.set_coeff(mask, std::uint32_t(rng.next()) & p.modulus_mask());
        }

        const NCPoly nc = nc_from_ring(p);
        const std::vector<std::uint16_t> values = p.eval_all();
        bool ok = nc.degree() <= d + k - 1;
        for (std::uint32_t x = 0; ok && std::uint64_t(x) < values.size(); ++x) {
            ok = nc.eval(x) == Dyadic{values[x], k};
        }

        const RingPoly back = nc_to_ring(nc, d + k - 1);
        for (std::uint32_t x = 0; ok && std::uint64_t(x) < values.size(); ++x) {
            ok = back.eval(x) == nc.eval_num(x);
        }

        // Agreement is preserved in both directions of the conversion.
        const BoolFn f = BoolFn::random(n, rng.next());
        if (ok) {
            const Agreement direct = agreement(k_lift(f, k), values);
            const Agreement via_nc = nc_boolean_agreement(nc, f);
            std::vector<std::uint16_t> back_vals(values.size());
            for (std::uint32_t x = 0; std::uint64_t(x) < values.size(); ++x)
                back_vals[x] = back.eval(x);
            const Agreement via_back =
                agreement(k_lift(f, nc.depth()), back_vals);
            ok = direct == via_nc && via_nc == via_back;
        }
        if (!ok) failures++;
    }
    return {"nc-roundtrip", failures == 0,
            {{"trials", trials}, {"seed", seed}, {"failures", failures}}};
}

CheckResult check_ramsey_probe(unsigned size, unsigned r, unsigned trials,
                               std::uint64_t seed) {
    unsigned found = 0;
    for (unsigned trial = 0; trial < trials; ++trial) {
        const Colouring c = Colouring::random(size, size, 1, 1, SplitMix64::at(seed, trial));
        const GridSearchResult res = find_monochromatic_grid(c, r);
        if (res.found) {
            // Re-running on the returned restriction must succeed immediately.
            const Colouring sub = c.restricted(res.subset_i, res.subset_j);
            const GridSearchResult again = find_monochromatic_grid(sub, r);
            if (!again.found || again.colour != res.colour)
                throw Error("check_ramsey_probe: restriction no longer monochromatic");
            found++;
        }
    }
    // Misses below the Ramsey threshold are legitimate; the probe records them.
    return {"ramsey-probe", true,
            {{"size", size}, {"r", r}, {"trials", trials}, {"seed", seed},
             {"found", found}}};
}

namespace {

// gamma <= 1/2 + 10 d / sqrt(n), decided exactly:
// (2 matches - total) <= 0, or (2 matches - total)^2 n <= (20 d total)^2.
bool maj_bound_satisfied(const Agreement& gamma, unsigned n, unsigned d) {
    const BigInt excess = 2 * gamma.matches - gamma.total;
    if (excess <= 0) return true;
    return excess * excess * n <= BigInt(400) * d * d * gamma.total * gamma.total;
}

}  // namespace

nlohmann::json experiment_maj_bound(std::uint64_t budget) {
    std::vector<std::array<unsigned, 3>> cells;
    for (unsigned n : {1u, 3u, 5u}) {
        for (unsigned d : {1u, 2u}) {
            for (unsigned k : {1u, 2u}) {
                if (d <= n) cells.push_back({n, d, k});
            }
        }
    }
    for (unsigned n = 1; n <= 9; ++n) {
        for (unsigned k : {1u, 2u}) cells.push_back({n, 1u, k});
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    nlohmann::json rows = nlohmann::json::array();
    bool all_satisfied = true;
    for (const auto& [n, d, k] : cells) {
        const BoolFn maj = majority(n);
        const GammaResult res = gamma_exact(maj, d, k, budget);
        const GammaResult res_k1 =
            k == 1 ? res : gamma_exact(maj, d, 1, budget);
        const bool vacuous = 400ull * d * d >= n;  // bound >= 1
        const bool satisfied = maj_bound_satisfied(res.gamma, n, d);
        all_satisfied = all_satisfied && satisfied;
        rows.push_back({{"n", n},
                        {"d", d},
                        {"k", k},
                        {"gamma", res.gamma.str()},
                        {"gamma_float", res.gamma.value()},
                        {"bound_float", 0.5 + 10.0 * d / std::sqrt(double(n))},
                        {"satisfied", satisfied},
                        {"vacuous", vacuous},
                        {"equals_k1", res.gamma == res_k1.gamma}});
    }
    return {{"experiment", "maj-bound"},
            {"rows", std::move(rows)},
            {"all_satisfied", all_satisfied}};
}

nlohmann::json experiment_sym_sep(unsigned ell, const std::vector<unsigned>& ns,
                                  unsigned restarts, std::uint64_t seed) {
    const unsigned d = (1u << (ell - 1)) + (1u << (ell - 2));
    nlohmann::json rows = nlohmann::json::array();
    bool all_ge_half = true;
    for (unsigned n : ns) {
        const Agreement agr = sym_separation_agreement(n, ell);
        const bool ge_half = agr.at_least(1, 2);
        all_ge_half = all_ge_half && ge_half;
        nlohmann::json row{{"n", n},
                           {"d", d},
                           {"agreement", agr.str()},
                           {"agreement_float", agr.value()},
                           {"ge_half", ge_half}};
        if (n <= 16) {
            const GammaResult heur =
                gamma_heuristic(elem_sym_fn(n, std::uint64_t(1) << ell), d, 3,
                                restarts, seed);
            row["heuristic_gamma"] = heur.gamma.str();
            row["heuristic_gamma_float"] = heur.gamma.value();
        }
        rows.push_back(std::move(row));
    }
    return {{"experiment", "sym-sep"},
            {"ell", ell},
            {"seed", seed},
            {"rows", std::move(rows)},
            {"all_ge_half", all_ge_half}};
}

nlohmann::json experiment_quad_sep(unsigned n, std::uint64_t d, unsigned trials,
                                   std::uint64_t seed, std::uint64_t budget) {
    const RingPoly witness = quad_witness(n, d);
    const std::vector<std::uint16_t> witness_vals = witness.eval_all();

    // |{(x,y): S_d(x) = S_d(y) = 1}| exactly, from one half.
    std::uint64_t odd_half = 0;
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x) {
        odd_half += elem_sym_mod2(d, unsigned(std::popcount(x)));
    }
    const std::uint64_t overlap = odd_half * odd_half;
    const std::uint64_t domain = std::uint64_t(1) << (2 * n);

    const bool tiny = 2 * n <= 6;
    nlohmann::json rows = nlohmann::json::array();
    bool all_satisfied = true;
    for (unsigned trial = 0; trial < trials; ++trial) {
        const std::uint64_t h_seed = SplitMix64::at(seed, trial);
        const BoolFn h = BoolFn::random(2 * n, h_seed);
        const BoolFn f = construct_f_h(n, d, h);
        const Agreement agr = agreement(k_lift(f, 2), witness_vals);
        const bool satisfied = agr.matches >= BigInt(domain - overlap);
        all_satisfied = all_satisfied && satisfied;
        nlohmann::json row{{"trial", trial},
                           {"h_seed", h_seed},
                           {"agreement", agr.str()},
                           {"agreement_float", agr.value()},
                           {"bound", std::to_string(domain - overlap) + "/" +
                                         std::to_string(domain)},
                           {"satisfied", satisfied}};
        if (tiny) {
            const GammaResult exact =
                gamma_exact(f, unsigned(3 * d - 1), 1, budget);
            row["gamma_3d1_k1"] = exact.gamma.str();
            row["gamma_3d1_k1_float"] = exact.gamma.value();
        }
        rows.push_back(std::move(row));
    }
    return {{"experiment", "quad-sep"},
            {"n", n},
            {"d", d},
            {"seed", seed},
            {"overlap", overlap},
            {"rows", std::move(rows)},
            {"all_satisfied", all_satisfied}};
}

namespace {

std::string csv_escape(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string rows_to_csv(const nlohmann::json& rows,
                        const std::vector<std::string>& columns) {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << columns[i];
    }
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "");
            if (row.contains(columns[i])) os << csv_escape(row.at(columns[i]));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string csv_maj_bound(const nlohmann::json& report) {
    return rows_to_csv(report.at("rows"),
                       {"n", "d", "k", "gamma", "gamma_float", "bound_float",
                        "satisfied", "vacuous", "equals_k1"});
}

std::string csv_sym_sep(const nlohmann::json& report) {
    return rows_to_csv(report.at("rows"),
                       {"n", "d", "agreement", "agreement_float", "ge_half",
                        "heuristic_gamma", "heuristic_gamma_float"});
}

std::string csv_quad_sep(const nlohmann::json& report) {
    return rows_to_csv(report.at("rows"),
                       {"trial", "h_seed", "agreement", "agreement_float", "bound",
                        "satisfied", "gamma_3d1_k1", "gamma_3d1_k1_float"});
}

}  // namespace zkpoly
