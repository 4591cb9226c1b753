#ifndef EXHAUSTION_DIFFRACTION_HPP
#define EXHAUSTION_DIFFRACTION_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace exhaustion {

/// Monochromatic scalar wave: k = omega0 / c.
struct WaveParams {
    double k = 1.0;
    double omega0 = 1.0;
    double c = 1.0;

    static WaveParams from_wavenumber(double k, double c = 1.0) {
        return {k, k * c, c};
    }
    static WaveParams from_frequency(double omega0, double c) {
        return {omega0 / c, omega0, c};
    }
};

/// Spatial-frequency transform of the aperture at z = 0. The field
/// expansion requires evenness in both arguments; `even_symmetric`
/// records the caller's promise and can be spot-checked.
struct Aperture {
    std::function<double(double, double)> transform;
    bool even_symmetric = false;

    /// F == 1 (idealized flat spectrum).
    static Aperture unit();
    /// Separable rectangular aperture: sin(wx kx)/(wx kx) times the same
    /// in ky. Even in both arguments.
    static Aperture rect(double wx, double wy);
};

/// Randomized evenness check: transform(kx,ky) == transform(-kx,ky)
/// == transform(kx,-ky) on `trials` points drawn from [-k, k]^2.
bool aperture_evenness_holds(const Aperture& ap, double k, int trials = 32,
                             unsigned seed = 1u);

struct FieldPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

/// Transverse wavenumbers above cutoff (kx^2 + ky^2 > k^2) make the
/// z-exponent imaginary. `decay` keeps the bounded evanescent branch
/// e^(-z k sqrt(|r|)); `zero` drops such terms entirely.
enum class EvanescentMode { decay, zero };

/// Truncation depths of the two transverse dyadic expansions.
struct LevelPair {
    int n_levels = 8;
    int p_levels = 8;
};

/// Diffracted field by the dyadic expansion of the propagating-square
/// angular spectrum, evaluated in the telescoped tensor-product form
/// (an interior-node double Riemann sum with (2^N - 1)(2^P - 1) terms).
/// Requires ap.even_symmetric and levels >= 1 per axis.
std::complex<double> field_exhaustion(const Aperture& ap, const FieldPoint& pt,
                                      const WaveParams& wave, LevelPair levels,
                                      EvanescentMode mode = EvanescentMode::decay);

/// Brute-force midpoint quadrature of the angular-spectrum integral over
/// [-k, k]^2 on a grid x grid lattice; the oracle for field_exhaustion.
/// Requires grid >= 64.
std::complex<double> field_reference(const Aperture& ap, const FieldPoint& pt,
                                     const WaveParams& wave, int grid,
                                     EvanescentMode mode = EvanescentMode::decay);

/// |laplacian(phi) + k^2 phi| / (k^2 max(|phi|, 1e-12)) at `pt`, with the
/// Laplacian taken by 7-point central second differences of step h
/// (default 0.01/k). Requires |pt.z| >= h so the stencil stays on one
/// side of the screen.
double helmholtz_residual(
    const std::function<std::complex<double>(const FieldPoint&)>& field,
    const FieldPoint& pt, double k, double h = 0.0);

/// One plane-wave constituent of the expansion. kz and group_speed_z are
/// unset for evanescent components.
struct PlaneWaveComponent {
    int n = 0;
    std::int64_t m = 0;
    int p = 0;
    std::int64_t q = 0;
    double kx = 0.0;
    double ky = 0.0;
    double weight = 0.0;  // (-1)^(m+q) 2^-(n+p) F(kx, ky)
    std::optional<double> kz;
    std::optional<double> group_speed_z;  // c * kz / k
    bool evanescent = false;
};

/// Enumerates every (n, m, p, q) component through the given levels in
/// lexicographic order. Component count is
/// (2^(N+1) - 2 - N) * (2^(P+1) - 2 - P).
std::vector<PlaneWaveComponent> group_velocity_spectrum(const Aperture& ap,
                                                        const WaveParams& wave,
                                                        LevelPair levels);

namespace detail {
/// Literal quadruple sum of the expansion, for cross-validating the
/// tensor-product path at small truncation depths.
std::complex<double> field_quadruple_sum(const Aperture& ap,
                                         const FieldPoint& pt,
                                         const WaveParams& wave,
                                         LevelPair levels, EvanescentMode mode);
}  // namespace detail

}  // namespace exhaustion

#endif
