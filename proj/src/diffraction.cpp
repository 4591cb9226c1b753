#include "exhaustion/diffraction.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "exhaustion/summation.hpp"

namespace exhaustion {

namespace {

const double kPi = std::acos(-1.0);

double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }

// e^(i z k sqrt(r)) for the unit-normalized radicand r = 1 - u^2 - v^2,
// taking the bounded branch when r < 0.
std::complex<double> z_factor(double r, double zk, EvanescentMode mode) {
    if (r >= 0.0) {
        const double phase = zk * std::sqrt(r);
        return {std::cos(phase), std::sin(phase)};
    }
    if (mode == EvanescentMode::zero) return {0.0, 0.0};
    return {std::exp(-zk * std::sqrt(-r)), 0.0};
}

void require_levels(LevelPair levels) {
    if (levels.n_levels < 1 || levels.p_levels < 1 ||
        levels.n_levels > 24 || levels.p_levels > 24) {
        throw std::invalid_argument("levels must be in [1, 24] per axis");
    }
}

void require_even(const Aperture& ap) {
    if (!ap.even_symmetric) {
        throw std::invalid_argument(
            "field_exhaustion requires an even-symmetric aperture transform");
    }
}

}  // namespace

Aperture Aperture::unit() {
    return {[](double, double) { return 1.0; }, true};
}

Aperture Aperture::rect(double wx, double wy) {
    return {[wx, wy](double kx, double ky) {
                return sinc(wx * kx) * sinc(wy * ky);
            },
            true};
}

bool aperture_evenness_holds(const Aperture& ap, double k, int trials,
                             unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> pick(-k, k);
    for (int i = 0; i < trials; ++i) {
        const double kx = pick(rng);
        const double ky = pick(rng);
        const double f = ap.transform(kx, ky);
        if (f != ap.transform(-kx, ky) || f != ap.transform(kx, -ky)) {
            return false;
        }
    }
    return true;
}

std::complex<double> field_exhaustion(const Aperture& ap, const FieldPoint& pt,
                                      const WaveParams& wave, LevelPair levels,
                                      EvanescentMode mode) {
    require_even(ap);
    require_levels(levels);

    const int N = levels.n_levels;
    const int P = levels.p_levels;
    const std::int64_t mmax = (std::int64_t(1) << N) - 1;
    const std::int64_t qmax = (std::int64_t(1) << P) - 1;
    const double k = wave.k;
    const double zk = pt.z * k;

    CompensatedSum re, im;
    for (std::int64_t m = 1; m <= mmax; ++m) {
        const double um = std::ldexp(static_cast<double>(m), -N);
        const double kx = um * k;
        const double cx = std::cos(kx * pt.x);
        for (std::int64_t q = 1; q <= qmax; ++q) {
            const double uq = std::ldexp(static_cast<double>(q), -P);
            const double ky = uq * k;
            const double amplitude =
                ap.transform(kx, ky) * cx * std::cos(ky * pt.y);
            const std::complex<double> term =
                amplitude * z_factor(1.0 - um * um - uq * uq, zk, mode);
            re.add(term.real());
            im.add(term.imag());
        }
    }

    const std::complex<double> carrier =
        std::polar(2.0 * k * k / kPi, -wave.omega0 * pt.t);
    return carrier * std::complex<double>(std::ldexp(re.value(), -(N + P)),
                                          std::ldexp(im.value(), -(N + P)));
}

std::complex<double> field_reference(const Aperture& ap, const FieldPoint& pt,
                                     const WaveParams& wave, int grid,
                                     EvanescentMode mode) {
    if (grid < 64) throw std::invalid_argument("reference grid must be >= 64");

    const double k = wave.k;
    const double cell = 2.0 * k / grid;
    const double zk = pt.z * k;

    CompensatedSum re, im;
    for (int i = 0; i < grid; ++i) {
        const double kx = -k + (i + 0.5) * cell;
        for (int j = 0; j < grid; ++j) {
            const double ky = -k + (j + 0.5) * cell;
            const double r = 1.0 - (kx * kx + ky * ky) / (k * k);
            const std::complex<double> phase =
                std::polar(1.0, -(kx * pt.x + ky * pt.y));
            const std::complex<double> term =
                ap.transform(kx, ky) * phase * z_factor(r, zk, mode);
            re.add(term.real());
            im.add(term.imag());
        }
    }

    const std::complex<double> carrier =
        std::polar(cell * cell / (2.0 * kPi), -wave.omega0 * pt.t);
    return carrier * std::complex<double>(re.value(), im.value());
}

double helmholtz_residual(
    const std::function<std::complex<double>(const FieldPoint&)>& field,
    const FieldPoint& pt, double k, double h) {
    if (!(k > 0)) throw std::invalid_argument("k must be > 0");
    if (h <= 0.0) h = 0.01 / k;
    if (std::abs(pt.z) < h) {
        throw std::invalid_argument("stencil point must sit at least h from z = 0");
    }

    const std::complex<double> center = field(pt);
    std::complex<double> laplacian{0.0, 0.0};
    for (int axis = 0; axis < 3; ++axis) {
        FieldPoint plus = pt;
        FieldPoint minus = pt;
        double* coords_plus[3] = {&plus.x, &plus.y, &plus.z};
        double* coords_minus[3] = {&minus.x, &minus.y, &minus.z};
        *coords_plus[axis] += h;
        *coords_minus[axis] -= h;
        laplacian += (field(plus) - 2.0 * center + field(minus)) / (h * h);
    }

    const double scale = k * k * std::max(std::abs(center), 1e-12);
    return std::abs(laplacian + k * k * center) / scale;
}

std::vector<PlaneWaveComponent> group_velocity_spectrum(const Aperture& ap,
                                                        const WaveParams& wave,
                                                        LevelPair levels) {
    require_even(ap);
    require_levels(levels);

    const double k = wave.k;
    std::vector<PlaneWaveComponent> out;
    const auto per_axis = [](int depth) {
        return (std::int64_t(2) << depth) - 2 - depth;
    };
    out.reserve(static_cast<std::size_t>(per_axis(levels.n_levels) *
                                         per_axis(levels.p_levels)));

    for (int n = 1; n <= levels.n_levels; ++n) {
        for (std::int64_t m = 1; m < (std::int64_t(1) << n); ++m) {
            const double um = std::ldexp(static_cast<double>(m), -n);
            for (int p = 1; p <= levels.p_levels; ++p) {
                for (std::int64_t q = 1; q < (std::int64_t(1) << p); ++q) {
                    const double uq = std::ldexp(static_cast<double>(q), -p);
                    PlaneWaveComponent comp;
                    comp.n = n;
                    comp.m = m;
                    comp.p = p;
                    comp.q = q;
                    comp.kx = um * k;
                    comp.ky = uq * k;
                    const double sign = ((m + q) % 2 == 0) ? 1.0 : -1.0;
                    comp.weight =
                        sign * std::ldexp(ap.transform(comp.kx, comp.ky), -(n + p));
                    const double r = 1.0 - um * um - uq * uq;
                    if (r >= 0.0) {
                        comp.kz = k * std::sqrt(r);
                        comp.group_speed_z = wave.c * *comp.kz / k;
                    } else {
                        comp.evanescent = true;
                    }
                    out.push_back(comp);
                }
            }
        }
    }
    return out;
}

namespace detail {

std::complex<double> field_quadruple_sum(const Aperture& ap,
                                         const FieldPoint& pt,
                                         const WaveParams& wave,
                                         LevelPair levels, EvanescentMode mode) {
    require_even(ap);
    require_levels(levels);

    const double k = wave.k;
    const double zk = pt.z * k;
    std::complex<double> acc{0.0, 0.0};
    for (int n = 1; n <= levels.n_levels; ++n) {
        for (std::int64_t m = 1; m < (std::int64_t(1) << n); ++m) {
            const double um = std::ldexp(static_cast<double>(m), -n);
            const double kx = um * k;
            for (int p = 1; p <= levels.p_levels; ++p) {
                for (std::int64_t q = 1; q < (std::int64_t(1) << p); ++q) {
                    const double uq = std::ldexp(static_cast<double>(q), -p);
                    const double ky = uq * k;
                    const double sign = ((m + q) % 2 == 0) ? 1.0 : -1.0;
                    const double amplitude = sign *
                                             std::ldexp(ap.transform(kx, ky), -(n + p)) *
                                             std::cos(kx * pt.x) *
                                             std::cos(ky * pt.y);
                    acc += amplitude *
                           z_factor(1.0 - um * um - uq * uq, zk, mode);
                }
            }
        }
    }
    return std::polar(2.0 * k * k / kPi, -wave.omega0 * pt.t) * acc;
}

}  // namespace detail

}  // namespace exhaustion
