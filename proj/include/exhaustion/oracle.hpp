#ifndef EXHAUSTION_ORACLE_HPP
#define EXHAUSTION_ORACLE_HPP

#include "exhaustion/integrand.hpp"

namespace exhaustion {

/// Adaptive Simpson quadrature with Richardson correction. Entirely
/// independent of the dyadic engine; used as the reference oracle in
/// verification runs. Throws std::runtime_error if the recursion depth
/// cap is exceeded before the tolerance is met.
double adaptive_simpson(const Integrand& f, const Interval& interval,
                        double tol = 1e-10, int max_depth = 52);

}  // namespace exhaustion

#endif
