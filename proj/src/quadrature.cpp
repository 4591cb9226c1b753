#include "exhaustion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace exhaustion {

namespace {

constexpr int kMaxSupportedLevel = 60;

void check_level(int n) {
    if (n < 1 || n > kMaxSupportedLevel) {
        throw std::invalid_argument("level n must be in [1, " +
                                    std::to_string(kMaxSupportedLevel) +
                                    "], got " + std::to_string(n));
    }
}

// a + m(b-a)/2^n, with the product m*(b-a) rounded once and then scaled
// by an exact power of two. Keeping this exact form shared between the
// naive and incremental paths makes translated runs bit-identical.
inline double node_at(const Interval& iv, int n, std::int64_t m) {
    return iv.a + std::ldexp(static_cast<double>(m) * iv.width(), -n);
}

void validate(const QuadratureOptions& opts) {
    if (!(opts.tol > 0)) throw std::invalid_argument("tol must be > 0");
    if (opts.min_level < 1) throw std::invalid_argument("min_level must be >= 1");
    if (opts.max_level < opts.min_level)
        throw std::invalid_argument("max_level must be >= min_level");
    if (opts.max_level > kMaxSupportedLevel)
        throw std::invalid_argument("max_level exceeds supported depth");
}

QuadratureResult run_levels(const Integrand& f, const Interval& iv,
                            const QuadratureOptions& opts) {
    QuadratureResult res;
    detail::DyadicEngine engine;
    const double width = iv.width();

    int consecutive_hits = 0;
    for (int level = 1; level <= opts.max_level; ++level) {
        std::int64_t bad_m = -1;
        const double a_term = engine.advance(
            [&](std::int64_t m, int n) { return f(node_at(iv, n, m)); },
            opts.threads, &bad_m);
        if (bad_m >= 0) {
            res.converged = false;
            res.termination = Termination::non_finite_sample;
            res.offending_node = node_at(iv, level, bad_m);
            res.error_estimate = std::numeric_limits<double>::quiet_NaN();
            return res;
        }

        res.history.push_back(
            {level, a_term, std::int64_t(1) << (level - 1)});
        res.levels_used = level;
        res.eval_count = engine.eval_count();
        res.value = width * engine.partial_unscaled();
        res.error_estimate = std::abs(a_term) * std::abs(width);

        const bool hit =
            res.error_estimate <= opts.tol * std::max(1.0, std::abs(res.value));
        consecutive_hits = hit ? consecutive_hits + 1 : 0;

        if (level >= opts.min_level && consecutive_hits >= 2) {
            res.converged = true;
            res.termination = Termination::tolerance_met;
            return res;
        }
    }
    res.converged = false;
    res.termination = Termination::level_cap;
    return res;
}

}  // namespace

double dyadic_node(const Interval& interval, int n, std::int64_t m) {
    check_level(n);
    const std::int64_t count = (std::int64_t(1) << n) - 1;
    if (m < 1 || m > count) {
        throw std::invalid_argument("node index m must be in [1, 2^n - 1], got " +
                                    std::to_string(m));
    }
    return node_at(interval, n, m);
}

LevelTerm level_term_naive(const Integrand& f, const Interval& interval,
                           int n, int threads) {
    check_level(n);
    const std::int64_t count = (std::int64_t(1) << n) - 1;
    const detail::ChunkSum sum = detail::sum_indexed(
        count,
        [&](std::int64_t i) {
            const std::int64_t m = i + 1;
            const double v = f(node_at(interval, n, m));
            return (m % 2 == 1) ? v : -v;
        },
        threads);
    if (sum.first_nonfinite >= 0) {
        const std::int64_t m = sum.first_nonfinite + 1;
        const double x = node_at(interval, n, m);
        throw NonFiniteSampleError(x, f(x),
                                   "level " + std::to_string(n) + ", m = " +
                                       std::to_string(m));
    }
    return {n, std::ldexp(sum.acc.value(), -n), std::int64_t(1) << (n - 1)};
}

RefinementState refine(const RefinementState& state, const Integrand& f,
                       int threads) {
    RefinementState next = state;
    std::int64_t bad_m = -1;
    const double a_term = next.engine.advance(
        [&](std::int64_t m, int n) { return f(node_at(next.interval, n, m)); },
        threads, &bad_m);
    if (bad_m >= 0) {
        const double x = node_at(state.interval, state.level() + 1, bad_m);
        throw NonFiniteSampleError(x, f(x),
                                   "level " + std::to_string(state.level() + 1));
    }
    next.history.push_back(
        {next.level(), a_term, std::int64_t(1) << (next.level() - 1)});
    return next;
}

QuadratureResult integrate(const Integrand& f, const Interval& interval,
                           const QuadratureOptions& opts) {
    validate(opts);

    if (interval.degenerate()) {
        QuadratureResult res;
        res.converged = true;
        res.termination = Termination::tolerance_met;
        return res;
    }

    if (interval.a > interval.b) {
        QuadratureResult res = run_levels(f, {interval.b, interval.a}, opts);
        res.value = -res.value;
        return res;
    }
    return run_levels(f, interval, opts);
}

QuadratureResult integrate_from_zero(const Integrand& f, double b,
                                     const QuadratureOptions& opts) {
    return integrate(f, {0.0, b}, opts);
}

QuadratureResult integrate_symmetric(const Integrand& h, double b,
                                     const QuadratureOptions& opts) {
    if (!(b > 0)) throw std::invalid_argument("integrate_symmetric requires b > 0");
    Integrand folded(
        [h](double x) { return h(x) + h(-x); },
        h.label.empty() ? "folded" : h.label + " (folded)");
    return integrate(folded, {0.0, b}, opts);
}

std::vector<ConvergenceRow> convergence_report(const Integrand& f,
                                               const Interval& interval,
                                               int levels,
                                               std::optional<double> exact,
                                               int threads) {
    if (levels < 2) throw std::invalid_argument("convergence_report needs levels >= 2");
    check_level(levels + 1);

    const double width = interval.width();
    detail::DyadicEngine engine;
    std::vector<double> areas;    // A_n * width
    std::vector<double> partials; // S_n
    areas.reserve(levels + 1);
    partials.reserve(levels + 1);

    for (int level = 1; level <= levels + 1; ++level) {
        std::int64_t bad_m = -1;
        const double a_term = engine.advance(
            [&](std::int64_t m, int n) { return f(node_at(interval, n, m)); },
            threads, &bad_m);
        if (bad_m >= 0) {
            const double x = node_at(interval, level, bad_m);
            throw NonFiniteSampleError(x, f(x),
                                       "level " + std::to_string(level));
        }
        areas.push_back(a_term * width);
        partials.push_back(width * engine.partial_unscaled());
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ConvergenceRow> rows;
    rows.reserve(levels);
    for (int n = 1; n <= levels; ++n) {
        double ratio;
        if (exact) {
            const double en = std::abs(*exact - partials[n - 1]);
            const double en1 = std::abs(*exact - partials[n]);
            ratio = en == 0.0 ? nan : en1 / en;
        } else {
            const double an = std::abs(areas[n - 1]);
            const double an1 = std::abs(areas[n]);
            ratio = an == 0.0 ? nan : an1 / an;
        }
        rows.push_back({n, areas[n - 1], partials[n - 1], ratio});
    }
    return rows;
}

}  // namespace exhaustion
