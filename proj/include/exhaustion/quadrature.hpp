#ifndef EXHAUSTION_QUADRATURE_HPP
#define EXHAUSTION_QUADRATURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "exhaustion/dyadic_engine.hpp"
#include "exhaustion/integrand.hpp"

namespace exhaustion {

/// Area increment contributed by refinement level n. `value` excludes
/// the (b - a) factor, which is applied at accumulation time.
struct LevelTerm {
    int n = 0;
    double value = 0.0;
    std::int64_t new_node_count = 0;  // always 2^(n-1)
};

enum class Termination { tolerance_met, level_cap, non_finite_sample };

struct QuadratureOptions {
    double tol = 1e-10;
    int max_level = 24;
    int min_level = 2;
    int threads = 0;  // 0: consult EXH_THREADS (unset means serial)

    /// Runs exactly `level` refinements regardless of the tolerance.
    static QuadratureOptions forced(int level) {
        QuadratureOptions o;
        o.max_level = level;
        o.min_level = level;
        return o;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels_used = 0;
    std::int64_t eval_count = 0;
    bool converged = false;
    Termination termination = Termination::level_cap;
    std::vector<LevelTerm> history;
    /// Abscissa of the sample that came back non-finite, when
    /// termination == non_finite_sample.
    std::optional<double> offending_node;
};

/// Running refinement state: level N, interior node sum U_N, partial
/// integral S_N = (b-a) * 2^-N * U_N, and the per-level terms so far.
struct RefinementState {
    explicit RefinementState(Interval iv) : interval(iv) {}

    Interval interval;
    std::vector<LevelTerm> history;

    int level() const { return engine.level(); }
    double node_sum() const { return engine.node_sum(); }
    std::int64_t eval_count() const { return engine.eval_count(); }
    double partial() const {
        return interval.width() * engine.partial_unscaled();
    }

    detail::DyadicEngine engine;
};

/// a + m(b-a)/2^n, the interior node grid. Throws std::invalid_argument
/// unless n >= 1 and 1 <= m <= 2^n - 1.
double dyadic_node(const Interval& interval, int n, std::int64_t m);

/// Literal alternating sum of level n over all 2^n - 1 nodes:
/// 2^-n * sum_m (-1)^(m+1) f(node(m, n)). Kept as the reference path for
/// cross-validating the incremental engine.
LevelTerm level_term_naive(const Integrand& f, const Interval& interval,
                           int n, int threads = 0);

/// Advances one refinement level, evaluating only the 2^N new odd
/// nodes. Throws NonFiniteSampleError (leaving no visible state change;
/// the returned state is simply never produced) on a bad sample.
RefinementState refine(const RefinementState& state, const Integrand& f,
                       int threads = 0);

/// Exhaustion quadrature over [a, b] with the stopping rule
/// (b-a)|A_N| <= tol * max(1, |S_N|) on two consecutive levels.
/// a > b integrates over [b, a] and negates. a == b returns 0 without
/// evaluating f.
QuadratureResult integrate(const Integrand& f, const Interval& interval,
                           const QuadratureOptions& opts = {});

/// Integral from 0 to b (the a = 0 special case). Negative b follows
/// the orientation rule: the result is minus the [b, 0] integral.
QuadratureResult integrate_from_zero(const Integrand& f, double b,
                                     const QuadratureOptions& opts = {});

/// Symmetric-interval form: approximates the integral of h over [-b, b]
/// by applying the engine to h(x) + h(-x) on [0, b]. Odd integrands give
/// exactly 0 at every truncation level. Requires b > 0.
QuadratureResult integrate_symmetric(const Integrand& h, double b,
                                     const QuadratureOptions& opts = {});

/// One row of a convergence table. `level_area` is A_n * (b-a);
/// `error_ratio` is |I - S_(n+1)| / |I - S_n| when an exact value is
/// supplied, else |A_(n+1) / A_n|. NaN when the denominator vanishes.
struct ConvergenceRow {
    int n = 0;
    double level_area = 0.0;
    double partial = 0.0;
    double error_ratio = 0.0;
};

/// Convergence diagnostics for levels 1..levels (one extra level is
/// evaluated internally so every row has a ratio). Requires levels >= 2.
std::vector<ConvergenceRow> convergence_report(
    const Integrand& f, const Interval& interval, int levels,
    std::optional<double> exact = std::nullopt, int threads = 0);

}  // namespace exhaustion

#endif
