#include "exhaustion/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace exhaustion {

namespace {

struct SimpsonPanel {
    double value;  // (b-a)/6 * (fa + 4*fm + fb)
    double fm;
};

SimpsonPanel panel(const Integrand& f, double a, double fa, double b,
                   double fb) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    return {(b - a) / 6.0 * (fa + 4.0 * fm + fb), fm};
}

double recurse(const Integrand& f, double a, double fa, double b, double fb,
               double fm, double whole, double tol, int depth) {
    if (depth <= 0) {
        throw std::runtime_error("adaptive_simpson: recursion depth cap exceeded");
    }
    const double m = 0.5 * (a + b);
    const SimpsonPanel left = panel(f, a, fa, m, fm);
    const SimpsonPanel right = panel(f, m, fm, b, fb);
    const double delta = left.value + right.value - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left.value + right.value + delta / 15.0;
    }
    return recurse(f, a, fa, m, fm, left.fm, left.value, 0.5 * tol, depth - 1) +
           recurse(f, m, fm, b, fb, right.fm, right.value, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const Integrand& f, const Interval& interval,
                        double tol, int max_depth) {
    if (interval.degenerate()) return 0.0;
    if (interval.a > interval.b) {
        return -adaptive_simpson(f, {interval.b, interval.a}, tol, max_depth);
    }
    const double fa = f(interval.a);
    const double fb = f(interval.b);
    const SimpsonPanel top = panel(f, interval.a, fa, interval.b, fb);
    return recurse(f, interval.a, fa, interval.b, fb, top.fm, top.value, tol,
                   max_depth);
}

}  // namespace exhaustion
