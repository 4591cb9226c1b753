#ifndef EXHAUSTION_DYADIC_ENGINE_HPP
#define EXHAUSTION_DYADIC_ENGINE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "exhaustion/integrand.hpp"
#include "exhaustion/summation.hpp"

namespace exhaustion::detail {

/// Odd-node sample at refinement level n: m is odd, 1 <= m < 2^n.
/// The second argument is the level the node belongs to.
using OddNodeSampler = std::function<double(std::int64_t, int)>;

/// Incremental accumulator for the alternating dyadic double sum.
///
/// Level N holds U_N = sum of samples at every interior node m/2^N,
/// m = 1..2^N-1, built by adding only the odd-indexed (new) nodes of
/// each level. The level increment, without any interval-width factor,
/// is A_{N+1} = 2^-(N+1) * U_{N+1} - 2^-N * U_N, evaluated in the
/// cancellation-free form 2^-(N+1) * (odd_sum - U_N).
///
/// The same engine backs both the interval quadrature (samples of
/// f(a + m(b-a)/2^n)) and the series catalog (samples of the printed
/// per-series summand at m/2^n), so cross-checks between the two see
/// identical arithmetic.
class DyadicEngine {
public:
    int level() const { return level_; }
    double node_sum() const { return node_sum_.value(); }
    std::int64_t eval_count() const { return evals_; }

    /// 2^-N * U_N; multiply by the interval width for the partial sum S_N.
    double partial_unscaled() const {
        return std::ldexp(node_sum_.value(), -level_);
    }

    /// Advances one level, evaluating the 2^N new odd nodes of level N+1.
    /// Returns the unscaled level term A_{N+1}. On a non-finite sample the
    /// engine is left untouched and the offending node index (the odd m)
    /// is stored in *bad_m; the caller maps it to an abscissa and throws.
    /// Returns NaN in that case.
    double advance(const OddNodeSampler& sample, int threads,
                   std::int64_t* bad_m) {
        const int next = level_ + 1;
        const std::int64_t new_nodes = std::int64_t(1) << level_;
        const ChunkSum odd = sum_indexed(
            new_nodes,
            [&](std::int64_t j) { return sample(2 * j + 1, next); }, threads);
        if (odd.first_nonfinite >= 0) {
            if (bad_m) *bad_m = 2 * odd.first_nonfinite + 1;
            return std::numeric_limits<double>::quiet_NaN();
        }
        const double u_prev = node_sum_.value();
        node_sum_.add(odd.acc);
        evals_ += new_nodes;
        level_ = next;
        if (bad_m) *bad_m = -1;
        return std::ldexp(odd.acc.value() - u_prev, -next);
    }

private:
    CompensatedSum node_sum_;
    int level_ = 0;
    std::int64_t evals_ = 0;
};

}  // namespace exhaustion::detail

#endif
