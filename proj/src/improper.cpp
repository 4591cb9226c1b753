#include "exhaustion/improper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exhaustion/summation.hpp"

namespace exhaustion {

namespace {

void validate(const TailPolicy& policy) {
    if (!(policy.block_width > 0))
        throw std::invalid_argument("block_width must be > 0");
    if (!(policy.tail_tol > 0))
        throw std::invalid_argument("tail_tol must be > 0");
    if (policy.max_blocks < 1)
        throw std::invalid_argument("max_blocks must be >= 1");
    if (policy.consecutive_small < 2)
        throw std::invalid_argument("consecutive_small must be >= 2");
}

}  // namespace

QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const TailPolicy& policy,
                                         const QuadratureOptions& opts,
                                         std::vector<double>* block_values) {
    validate(policy);
    if (block_values) block_values->clear();

    QuadratureResult total;
    CompensatedSum value;
    CompensatedSum inner_estimates;
    double last_block_magnitude = 0.0;
    bool inner_all_converged = true;
    int small_run = 0;
    bool tail_met = false;

    const double b = policy.block_width;
    for (int p = 0; p < policy.max_blocks; ++p) {
        const Interval block{p * b, (p + 1) * b};
        const QuadratureResult inner = integrate(f, block, opts);

        total.eval_count += inner.eval_count;
        total.levels_used = std::max(total.levels_used, inner.levels_used);

        if (inner.termination == Termination::non_finite_sample) {
            total.value = value.value();
            total.converged = false;
            total.termination = Termination::non_finite_sample;
            total.offending_node = inner.offending_node;
            total.error_estimate = std::numeric_limits<double>::quiet_NaN();
            return total;
        }
        inner_all_converged = inner_all_converged && inner.converged;

        value.add(inner.value);
        inner_estimates.add(inner.error_estimate);
        last_block_magnitude = std::abs(inner.value);
        if (block_values) block_values->push_back(inner.value);

        small_run = (last_block_magnitude <= policy.tail_tol) ? small_run + 1 : 0;
        if (small_run >= policy.consecutive_small) {
            tail_met = true;
            break;
        }
    }

    total.value = value.value();
    total.error_estimate = last_block_magnitude + inner_estimates.value();
    total.converged = tail_met && inner_all_converged;
    total.termination = total.converged ? Termination::tolerance_met
                                        : Termination::level_cap;
    return total;
}

}  // namespace exhaustion
