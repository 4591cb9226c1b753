#ifndef EXHAUSTION_IMPROPER_HPP
#define EXHAUSTION_IMPROPER_HPP

#include <vector>

#include "exhaustion/quadrature.hpp"

namespace exhaustion {

/// Controls the block decomposition of a semi-infinite integral into
/// definite integrals over [p*b, (p+1)*b].
struct TailPolicy {
    double block_width = 1.0;
    double tail_tol = 1e-10;
    int max_blocks = 10000;
    /// Blocks below tail_tol needed to stop; >= 2 so a single
    /// oscillation zero cannot fake convergence.
    int consecutive_small = 2;
};

/// Integral of f over [0, inf) as a sum of completed block integrals.
/// Summation stops once `consecutive_small` successive blocks are each
/// below tail_tol in magnitude.
///
/// converged requires both the tail criterion and convergence of every
/// inner block run; termination is level_cap when max_blocks ran out or
/// any block hit its level cap. error_estimate is the last block
/// magnitude plus the summed inner estimates. Supported class:
/// absolutely convergent integrands with an eventually decaying
/// envelope. Conditionally convergent oscillatory integrals end in a
/// non-converged diagnostic instead of a wrong value.
///
/// `block_values`, when non-null, receives the value of every computed
/// block in order.
QuadratureResult integrate_semi_infinite(
    const Integrand& f, const TailPolicy& policy,
    const QuadratureOptions& opts = {},
    std::vector<double>* block_values = nullptr);

}  // namespace exhaustion

#endif
