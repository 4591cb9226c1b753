#ifndef EXHAUSTION_BENCH_HPP
#define EXHAUSTION_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "exhaustion/integrand.hpp"

namespace exhaustion {

struct BenchRow {
    std::string method;
    std::int64_t eval_count = 0;
    double abs_error = 0.0;
};

/// Absolute error at matched evaluation budgets 2^N - 1, N in
/// [min_level, max_level], for the dyadic exhaustion rule against
/// composite midpoint, trapezoid, and Simpson rules. Requires a known
/// exact integral value.
std::vector<BenchRow> bench_matched_evals(const Integrand& f,
                                          const Interval& interval,
                                          double exact, int min_level = 4,
                                          int max_level = 18);

struct BenchCase {
    std::string name;
    Integrand f;
    Interval interval;
    double exact;
};

/// Smooth corpus with analytic values and nonzero endpoint sums.
std::vector<BenchCase> default_bench_suite();

}  // namespace exhaustion

#endif
