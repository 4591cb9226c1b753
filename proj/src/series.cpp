#include "exhaustion/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "exhaustion/dyadic_engine.hpp"

namespace exhaustion {

namespace {

constexpr int kMaxLevels = 60;

double require(const std::optional<double>& v, const char* name) {
    if (!v) {
        throw std::invalid_argument(std::string("series parameter '") + name +
                                    "' is required");
    }
    return *v;
}

// 2^-N * U_N for the summand g evaluated at the exact dyadic fractions
// m/2^n. The engine is the same one behind interval quadrature, so a
// series and the matching integral see identical arithmetic.
template <typename G>
double dyadic_sum(int levels, int threads, G&& g) {
    if (levels < 1 || levels > kMaxLevels) {
        throw std::invalid_argument("levels must be in [1, " +
                                    std::to_string(kMaxLevels) + "]");
    }
    detail::DyadicEngine engine;
    for (int level = 1; level <= levels; ++level) {
        std::int64_t bad_m = -1;
        engine.advance(
            [&](std::int64_t m, int n) {
                return g(std::ldexp(static_cast<double>(m), -n));
            },
            threads, &bad_m);
        if (bad_m >= 0) {
            const double u = std::ldexp(static_cast<double>(bad_m), -level);
            throw NonFiniteSampleError(u, g(u), "series level " +
                                                    std::to_string(level));
        }
    }
    return engine.partial_unscaled();
}

}  // namespace

double eval_series(SeriesId id, const SeriesParams& params, int levels,
                   int threads) {
    switch (id) {
        case SeriesId::sinc_product:
            return sinc_product(require(params.x, "x"), levels);
        case SeriesId::sinc_sum: {
            const double a = require(params.x, "x");
            return dyadic_sum(levels, threads,
                              [a](double u) { return std::cos(u * a); });
        }
        case SeriesId::sine: {
            const double x = require(params.x, "x");
            return x * dyadic_sum(levels, threads,
                                  [x](double u) { return std::cos(u * x); });
        }
        case SeriesId::cosine: {
            const double x = require(params.x, "x");
            return 1.0 - x * dyadic_sum(levels, threads, [x](double u) {
                       return std::sin(u * x);
                   });
        }
        case SeriesId::exponential: {
            const double x = require(params.x, "x");
            return 1.0 + x * dyadic_sum(levels, threads, [x](double u) {
                       return std::exp(u * x);
                   });
        }
        case SeriesId::sine_integral: {
            const double a = require(params.a, "a");
            const double b = require(params.b, "b");
            return b * dyadic_sum(levels, threads, [a, b](double u) {
                       const double t = u * b;
                       return std::sin(a * t) / t;
                   });
        }
        case SeriesId::gaussian: {
            const double a = require(params.a, "a");
            const double b = require(params.b, "b");
            return b * dyadic_sum(levels, threads, [a, b](double u) {
                       const double t = u * b;
                       return std::exp(-a * t * t);
                   });
        }
        case SeriesId::natural_log: {
            const double x = require(params.x, "x");
            if (!(x > 0)) {
                throw std::invalid_argument("natural_log requires x in (0, inf)");
            }
            const double d = x - 1.0;
            return dyadic_sum(levels, threads,
                              [d](double u) { return d / (1.0 + u * d); });
        }
        case SeriesId::factorial: {
            const double p = require(params.p, "p");
            if (!(p >= 0)) {
                throw std::invalid_argument("factorial requires p in [0, inf)");
            }
            return dyadic_sum(levels, threads, [p](double u) {
                return std::pow(-std::log(u), p);
            });
        }
    }
    throw std::invalid_argument("unknown series id");
}

double sinc_product(double a, int terms) {
    if (terms < 0) throw std::invalid_argument("terms must be >= 0");
    const double seed = std::cos(0.5 * a);
    double acc = seed * seed;
    double running_product = 1.0;
    for (int n = 1; n <= terms; ++n) {
        running_product *= std::cos(std::ldexp(a, -n));
        const double s = std::sin(std::ldexp(a, -(n + 1)));
        acc += s * s * running_product;
    }
    return acc;
}

double sinc_sum(double a, int levels) {
    return eval_series(SeriesId::sinc_sum, SeriesParams::for_x(a), levels);
}

}  // namespace exhaustion
