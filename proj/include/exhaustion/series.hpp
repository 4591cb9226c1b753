#ifndef EXHAUSTION_SERIES_HPP
#define EXHAUSTION_SERIES_HPP

#include <optional>

namespace exhaustion {

/// Catalog of dyadic-series evaluators. Each entry is the level-truncated
/// double sum sum_n sum_m (-1)^(m+1) 2^-n g(m/2^n) for the function's own
/// summand g, with any prefactor or additive constant applied on top.
enum class SeriesId {
    sinc_product,   // product/sum hybrid identity for sin(x)/x
    sinc_sum,       // alternating dyadic sum for sin(x)/x
    sine,           // sin x = x * sum of cos(m x / 2^n)
    cosine,         // cos x = 1 - x * sum of sin(m x / 2^n)
    sine_integral,  // integral of sin(a t)/t over [0, b]
    exponential,    // e^x = 1 + x * sum of e^(m x / 2^n)
    gaussian,       // integral of e^(-a t^2) over [0, b]
    natural_log,    // ln x = sum of (x-1)/(2^n + m(x-1)), x > 0
    factorial,      // p! = sum of 2^-n [ln(2^n/m)]^p, p >= 0
};

/// Arguments for eval_series. Which fields are required depends on the
/// series: x for sine/cosine/exponential/natural_log and the sinc forms,
/// (a, b) for sine_integral and gaussian, p for factorial.
struct SeriesParams {
    std::optional<double> x;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> p;

    static SeriesParams for_x(double x) { return {x, {}, {}, {}}; }
    static SeriesParams for_ab(double a, double b) { return {{}, a, b, {}}; }
    static SeriesParams for_p(double p) { return {{}, {}, {}, p}; }
};

/// Evaluates the series truncated at level N via the telescoped
/// (incremental) path, with compensated ascending-m summation. Throws
/// std::invalid_argument on a missing parameter, a domain violation
/// (natural_log needs x > 0, factorial needs p >= 0), or levels < 1.
double eval_series(SeriesId id, const SeriesParams& params, int levels,
                   int threads = 0);

/// Truncated product-form identity for sin(a)/a:
/// cos^2(a/2) + sum_{n=1..terms} sin^2(a/2^(n+1)) prod_{m=1..n} cos(a/2^m).
/// terms >= 0; terms == 0 keeps only the cos^2 seed.
double sinc_product(double a, int terms);

/// Truncated alternating dyadic sum for sin(a)/a, levels >= 1. Agreement
/// with sinc_product at matched accuracy is the numerical witness that
/// the two identities coincide. The scaled variant sin(b*a)/a is
/// b * sinc_sum(b*a, levels) by substitution.
double sinc_sum(double a, int levels);

}  // namespace exhaustion

#endif
