#include "zkpoly/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"
#include "zkpoly/util.hpp"

namespace zkpoly {

namespace {

// Shared description of one exhaustive search. Digit j of the base-2^k
// modular Gray code drives monomial masks[m-1-j], so the fastest-changing
// digit touches the fewest evaluations (2^{n-d} of them).
struct SearchContext {
    unsigned n = 0, d = 0, k = 0;
    std::uint16_t kmask = 0;
    std::uint64_t domain = 0;  // 2^n
    std::vector<std::uint32_t> masks;  // canonical (popcount, value) order
    std::vector<std::uint16_t> lift;
};

// Gray digits of counter c: digit j = (c_j - c_{j+1}) mod 2^k where c_j are
// the base-2^k digits. Incrementing c bumps exactly one Gray digit by one.
std::vector<std::uint16_t> gray_digits(const SearchContext& ctx, std::uint64_t c) {
    const std::size_t m = ctx.masks.size();
    std::vector<std::uint16_t> g(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t cj = (ctx.k * j < 64) ? (c >> (ctx.k * j)) & ctx.kmask : 0;
        const std::uint64_t cj1 = (ctx.k * (j + 1) < 64) ? (c >> (ctx.k * (j + 1))) & ctx.kmask : 0;
        g[j] = std::uint16_t((cj - cj1) & ctx.kmask);
    }
    return g;
}

// Local optimum of one worker: match count plus the Gray digit vector of the
// winner. Digit j corresponds to canonical coefficient m-1-j, so the
// canonical lexicographic comparison reads digits from the back.
struct Best {
    bool valid = false;
    std::uint64_t matches = 0;
    std::vector<std::uint16_t> digits;
};

bool digits_lex_less(const std::vector<std::uint16_t>& a,
                     const std::vector<std::uint16_t>& b) {
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] != b[j]) return a[j] < b[j];
    }
    return false;
}

void offer(Best& best, std::uint64_t matches, const std::vector<std::uint16_t>& digits) {
    if (!best.valid || matches > best.matches ||
        (matches == best.matches && digits_lex_less(digits, best.digits))) {
        best.valid = true;
        best.matches = matches;
        best.digits = digits;
    }
}

// General engine: dense 16-bit evaluation table with incremental match count.
class EngineGeneric {
public:
    explicit EngineGeneric(const SearchContext& ctx) : ctx_(ctx) {
        upsets_.resize(ctx.masks.size());
        for (std::size_t j = 0; j < ctx.masks.size(); ++j) {
            const std::uint32_t mask = ctx.masks[ctx.masks.size() - 1 - j];
            for_each_superset(mask, ctx.n, [&](std::uint32_t x) {
                upsets_[j].push_back(x);
            });
        }
    }

    void init(const std::vector<std::uint16_t>& digits) {
        tab_.assign(ctx_.domain, 0);
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (!digits[j]) continue;
            for (std::uint32_t x : upsets_[j])
                tab_[x] = std::uint16_t((tab_[x] + digits[j]) & ctx_.kmask);
        }
        matches_ = 0;
        for (std::uint64_t x = 0; x < ctx_.domain; ++x) matches_ += (tab_[x] == ctx_.lift[x]);
    }

    void bump(unsigned digit) {
        const auto& ups = upsets_[digit];
        const std::uint16_t kmask = ctx_.kmask;
        std::int64_t delta = 0;
        for (std::uint32_t x : ups) {
            const std::uint16_t old = tab_[x];
            const std::uint16_t now = std::uint16_t((old + 1) & kmask);
            tab_[x] = now;
            delta += int(now == ctx_.lift[x]) - int(old == ctx_.lift[x]);
        }
        matches_ = std::uint64_t(std::int64_t(matches_) + delta);
    }

    std::uint64_t matches() const { return matches_; }

private:
    const SearchContext& ctx_;
    std::vector<std::vector<std::uint32_t>> upsets_;
    std::vector<std::uint16_t> tab_;
    std::uint64_t matches_ = 0;
};

// k = 1, n <= 6: the whole evaluation table is one 64-bit word, a coefficient
// bump is an XOR with the monomial's superset mask.
class EngineBits {
public:
    explicit EngineBits(const SearchContext& ctx) : ctx_(ctx) {
        upset_.assign(ctx.masks.size(), 0);
        for (std::size_t j = 0; j < ctx.masks.size(); ++j) {
            const std::uint32_t mask = ctx.masks[ctx.masks.size() - 1 - j];
            for_each_superset(mask, ctx.n, [&](std::uint32_t x) {
                upset_[j] |= std::uint64_t(1) << x;
            });
        }
        lift_ = 0;
        for (std::uint64_t x = 0; x < ctx.domain; ++x) {
            if (ctx.lift[x]) lift_ |= std::uint64_t(1) << x;
        }
    }

    void init(const std::vector<std::uint16_t>& digits) {
        state_ = 0;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (digits[j] & 1) state_ ^= upset_[j];
        }
    }

    void bump(unsigned digit) { state_ ^= upset_[digit]; }

    std::uint64_t matches() const {
        return ctx_.domain - std::popcount(state_ ^ lift_);
    }

private:
    const SearchContext& ctx_;
    std::vector<std::uint64_t> upset_;
    std::uint64_t state_ = 0, lift_ = 0;
};

// k = 2, n <= 5: two-bit lanes packed in one word; a bump adds one to every
// lane of the monomial's superset with the carry kept inside the lane.
class Engine2Bit {
public:
    static constexpr std::uint64_t kLow = 0x5555555555555555ULL;

    explicit Engine2Bit(const SearchContext& ctx) : ctx_(ctx) {
        sel_.assign(ctx.masks.size(), 0);
        for (std::size_t j = 0; j < ctx.masks.size(); ++j) {
            const std::uint32_t mask = ctx.masks[ctx.masks.size() - 1 - j];
            for_each_superset(mask, ctx.n, [&](std::uint32_t x) {
                sel_[j] |= std::uint64_t(1) << (2 * x);
            });
        }
        lift_ = 0;
        for (std::uint64_t x = 0; x < ctx.domain; ++x) {
            lift_ |= std::uint64_t(ctx.lift[x] & 3) << (2 * x);
        }
        valid_ = (ctx.domain == 32) ? kLow : (kLow & ((std::uint64_t(1) << (2 * ctx.domain)) - 1));
    }

    void init(const std::vector<std::uint16_t>& digits) {
        state_ = 0;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            for (unsigned rep = 0; rep < (digits[j] & 3u); ++rep) bump(unsigned(j));
        }
    }

    void bump(unsigned digit) {
        const std::uint64_t sel = sel_[digit];
        const std::uint64_t carry = state_ & sel;
        state_ ^= sel;
        state_ ^= carry << 1;
    }

    std::uint64_t matches() const {
        const std::uint64_t diff = state_ ^ lift_;
        const std::uint64_t eq = ~diff;
        return std::popcount(eq & (eq >> 1) & valid_);
    }

private:
    const SearchContext& ctx_;
    std::vector<std::uint64_t> sel_;
    std::uint64_t state_ = 0, lift_ = 0, valid_ = 0;
};

template <class Engine>
Best scan_range(const SearchContext& ctx, std::uint64_t c0, std::uint64_t c1) {
    Best best;
    if (c0 >= c1) return best;
    Engine eng(ctx);
    std::vector<std::uint16_t> digits = gray_digits(ctx, c0);
    eng.init(digits);
    for (std::uint64_t c = c0;;) {
        offer(best, eng.matches(), digits);
        if (++c == c1) break;
        const unsigned t = unsigned(std::countr_zero(c)) / ctx.k;
        digits[t] = std::uint16_t((digits[t] + 1) & ctx.kmask);
        eng.bump(t);
    }
    return best;
}

template <class Engine>
Best run_search(const SearchContext& ctx, std::uint64_t space, unsigned threads) {
    const unsigned workers = unsigned(std::min<std::uint64_t>(threads, space));
    std::vector<Best> results(workers);
    if (workers <= 1) {
        results[0] = scan_range<Engine>(ctx, 0, space);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = space / workers * w + std::min<std::uint64_t>(w, space % workers);
            const std::uint64_t hi = lo + space / workers + (w < space % workers ? 1 : 0);
            pool.emplace_back([&, w, lo, hi] { results[w] = scan_range<Engine>(ctx, lo, hi); });
        }
        for (auto& th : pool) th.join();
    }
    // Deterministic reduce: highest match count, then lexicographically
    // smallest coefficient vector, independent of the partition.
    Best best;
    for (const Best& b : results) {
        if (b.valid) offer(best, b.matches, b.digits);
    }
    return best;
}

RingPoly witness_from_digits(const SearchContext& ctx, const std::vector<std::uint16_t>& digits) {
    RingPoly w(ctx.n, ctx.k, ctx.d);
    const std::size_t m = ctx.masks.size();
    for (std::size_t i = 0; i < m; ++i) w.set_coeff(ctx.masks[i], digits[m - 1 - i]);
    return w;
}

SearchContext make_context(const BoolFn& f, unsigned d, unsigned k) {
    if (k < 1 || k > RingPoly::kMaxK) throw Error("gamma search: k must be in [1, 16]");
    SearchContext ctx;
    ctx.n = f.n();
    ctx.d = d;
    ctx.k = k;
    ctx.kmask = std::uint16_t((std::uint32_t(1) << k) - 1);
    ctx.domain = f.size();
    ctx.masks = monomial_masks(f.n(), d);
    ctx.lift = k_lift(f, k).values;
    return ctx;
}

}  // namespace

nlohmann::json GammaResult::to_json() const {
    return {{"gamma", gamma.to_json()},
            {"mode", mode == GammaMode::exact ? "exact" : "heuristic"},
            {"search_space_size", big_to_json(search_space_size)},
            {"witness", witness.to_json()}};
}

GammaResult gamma_exact(const BoolFn& f, unsigned d, unsigned k,
                        std::uint64_t budget, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    SearchContext ctx = make_context(f, d, k);
    const BigInt space_big = boost::multiprecision::pow(BigInt(big_pow2(k)),
                                                        unsigned(ctx.masks.size()));
    if (space_big > budget) throw BudgetExceeded(space_big.str());
    const std::uint64_t space = space_big.convert_to<std::uint64_t>();
    if (threads == 0) threads = worker_count();

    Best best;
    if (k == 1 && ctx.n <= 6) {
        best = run_search<EngineBits>(ctx, space, threads);
    } else if (k == 2 && ctx.n <= 5) {
        best = run_search<Engine2Bit>(ctx, space, threads);
    } else {
        best = run_search<EngineGeneric>(ctx, space, threads);
    }

    GammaResult result;
    result.gamma = Agreement::of_counts(best.matches, ctx.domain);
    result.witness = witness_from_digits(ctx, best.digits);
    result.mode = GammaMode::exact;
    result.search_space_size = space_big;
    result.elapsed = std::chrono::steady_clock::now() - start;
    if (!result.gamma.at_least(1, 2))
        throw Error("gamma_exact: result below 1/2, which is impossible");
    return result;
}

GammaResult gamma_heuristic(const BoolFn& f, unsigned d, unsigned k,
                            unsigned restarts, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    if (f.n() > 24) throw CapacityError("gamma_heuristic: n must be <= 24");
    SearchContext ctx = make_context(f, d, k);
    const std::size_t m = ctx.masks.size();
    const unsigned runs = std::max(restarts, 1u);

    Best best;
    std::vector<std::uint16_t> coeffs(m);
    std::vector<std::uint16_t> tab(ctx.domain);
    std::vector<std::uint64_t> counts(std::size_t(1) << k);

    for (unsigned run = 0; run < runs; ++run) {
        if (run == 0) {
            std::fill(coeffs.begin(), coeffs.end(), 0);
        } else {
            for (std::size_t i = 0; i < m; ++i) {
                coeffs[i] = std::uint16_t(
                    SplitMix64::at(seed, (std::uint64_t(run) << 32) | i) & ctx.kmask);
            }
        }
        std::fill(tab.begin(), tab.end(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!coeffs[i]) continue;
            for_each_superset(ctx.masks[i], ctx.n, [&](std::uint32_t x) {
                tab[x] = std::uint16_t((tab[x] + coeffs[i]) & ctx.kmask);
            });
        }
        std::uint64_t matches = 0;
        for (std::uint64_t x = 0; x < ctx.domain; ++x) matches += (tab[x] == ctx.lift[x]);

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < m; ++i) {
                const std::uint16_t cur = coeffs[i];
                std::fill(counts.begin(), counts.end(), 0);
                for_each_superset(ctx.masks[i], ctx.n, [&](std::uint32_t x) {
                    counts[(ctx.lift[x] - tab[x] + cur) & ctx.kmask]++;
                });
                std::uint16_t pick = 0;
                for (std::uint16_t v = 1; v <= ctx.kmask; ++v) {
                    if (counts[v] > counts[pick]) pick = v;
                }
                if (pick == cur) continue;
                const std::uint16_t delta = std::uint16_t((pick - cur) & ctx.kmask);
                for_each_superset(ctx.masks[i], ctx.n, [&](std::uint32_t x) {
                    tab[x] = std::uint16_t((tab[x] + delta) & ctx.kmask);
                });
                matches += counts[pick] - counts[cur];
                coeffs[i] = pick;
                changed = true;
            }
        }

        // Reuse the reducer; digits order is reversed canonical.
        std::vector<std::uint16_t> digits(m);
        for (std::size_t i = 0; i < m; ++i) digits[m - 1 - i] = coeffs[i];
        offer(best, matches, digits);
    }

    GammaResult result;
    result.gamma = Agreement::of_counts(best.matches, ctx.domain);
    result.witness = witness_from_digits(ctx, best.digits);
    result.mode = GammaMode::heuristic;
    result.search_space_size =
        boost::multiprecision::pow(BigInt(big_pow2(k)), unsigned(m));
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

bool gamma_monotone_check(const BoolFn& f, unsigned d, unsigned k, std::uint64_t budget) {
    return gamma_exact(f, d, k + 1, budget).gamma >= gamma_exact(f, d, k, budget).gamma;
}

bool gamma_collapse_check(const BoolFn& f, unsigned d, unsigned k, std::uint64_t budget) {
    const Agreement gk = gamma_exact(f, d, k, budget).gamma;
    const std::uint64_t pow_d = std::uint64_t(1) << d;
    const bool applies = (d == 1) || gk.more_than(pow_d - 1, pow_d);
    if (!applies) return true;
    return gk == gamma_exact(f, d, 1, budget).gamma;
}

}  // namespace zkpoly
