#include "exhaustion/bench.hpp"

#include <cmath>
#include <stdexcept>

#include "exhaustion/quadrature.hpp"
#include "exhaustion/summation.hpp"

namespace exhaustion {

namespace {

// Composite rules written to consume an exact evaluation budget.
double midpoint_rule(const Integrand& f, const Interval& iv, std::int64_t evals) {
    const double h = iv.width() / static_cast<double>(evals);
    CompensatedSum acc;
    for (std::int64_t i = 0; i < evals; ++i) {
        acc.add(f(iv.a + (static_cast<double>(i) + 0.5) * h));
    }
    return acc.value() * h;
}

double trapezoid_rule(const Integrand& f, const Interval& iv, std::int64_t evals) {
    const std::int64_t panels = evals - 1;
    const double h = iv.width() / static_cast<double>(panels);
    CompensatedSum acc;
    acc.add(0.5 * f(iv.a));
    for (std::int64_t i = 1; i < panels; ++i) {
        acc.add(f(iv.a + static_cast<double>(i) * h));
    }
    acc.add(0.5 * f(iv.b));
    return acc.value() * h;
}

double simpson_rule(const Integrand& f, const Interval& iv, std::int64_t evals) {
    // evals = 2M + 1 sample points over M panel pairs.
    const std::int64_t pairs = (evals - 1) / 2;
    const double h = iv.width() / static_cast<double>(2 * pairs);
    CompensatedSum acc;
    acc.add(f(iv.a));
    for (std::int64_t i = 1; i < 2 * pairs; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc.add(w * f(iv.a + static_cast<double>(i) * h));
    }
    acc.add(f(iv.b));
    return acc.value() * h / 3.0;
}

}  // namespace

std::vector<BenchRow> bench_matched_evals(const Integrand& f,
                                          const Interval& interval,
                                          double exact, int min_level,
                                          int max_level) {
    if (min_level < 2 || max_level < min_level || max_level > 30) {
        throw std::invalid_argument("bench levels must satisfy 2 <= min <= max <= 30");
    }

    std::vector<BenchRow> rows;
    for (int level = min_level; level <= max_level; ++level) {
        const std::int64_t budget = (std::int64_t(1) << level) - 1;
        const auto run = integrate(f, interval, QuadratureOptions::forced(level));
        rows.push_back({"exhaustion", run.eval_count,
                        std::abs(run.value - exact)});
        rows.push_back({"midpoint", budget,
                        std::abs(midpoint_rule(f, interval, budget) - exact)});
        rows.push_back({"trapezoid", budget,
                        std::abs(trapezoid_rule(f, interval, budget) - exact)});
        rows.push_back({"simpson", budget,
                        std::abs(simpson_rule(f, interval, budget) - exact)});
    }
    return rows;
}

std::vector<BenchCase> default_bench_suite() {
    std::vector<BenchCase> suite;
    suite.push_back({"exp",
                     Integrand([](double x) { return std::exp(x); }, "exp"),
                     {0.0, 1.0},
                     std::exp(1.0) - 1.0});
    suite.push_back({"cos",
                     Integrand([](double x) { return std::cos(x); }, "cos"),
                     {0.0, 1.0},
                     std::sin(1.0)});
    suite.push_back({"lorentzian",
                     Integrand([](double x) { return 1.0 / (1.0 + x * x); },
                               "1/(1+x^2)"),
                     {0.0, 1.0},
                     std::atan(1.0)});
    return suite;
}

}  // namespace exhaustion
