#include "galerkin/manufactured.hpp"

#include <cmath>
#include <numbers>

#include "galerkin/transform.hpp"

namespace galerkin {

namespace {
constexpr double pi = std::numbers::pi;
}

double spline_sigma(double s) { return 1.0 - 3.0 * s * s + 2.0 * s * s * s; }

double reflection_phi(double z) {
    z = std::fmod(z, 2.0 * pi);
    if (z < 0.0) z += 2.0 * pi;
    return (z <= pi) ? z / pi : (2.0 * pi - z) / pi;
}

double manufactured_vorticity_point(double x, double y) {
    return spline_sigma(reflection_phi(x)) * spline_sigma(reflection_phi(y)) *
           (1.0 + 0.25 * std::cos(8.0 * x) * std::cos(6.0 * y));
}

SpectralField manufactured_vorticity(const WaveGrid& grid) {
    const int m = grid.transform_size(true);
    const PhysicalGrid samples = sample_physical(m, manufactured_vorticity_point);
    return from_physical(samples, grid);
}

SpectralField cosine_field(const WaveGrid& grid, int k1, int k2, double amplitude) {
    SpectralField f(grid);
    f.set_coeff(k1, k2, Complex{amplitude / 2.0, 0.0});
    if (k2 != 0) f.set_coeff(-k1, -k2, Complex{amplitude / 2.0, 0.0});
    return f;
}

SpectralField algebraic_tail_field(const WaveGrid& grid, double power) {
    const int h = grid.half_width();
    SpectralField f(grid);
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            if (!grid.retains(k1, k2)) continue;
            if (k2 == 0 && k1 < 0) continue; // mirror fills the other half-row
            const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            const double mag = std::pow(ksq, power / 2.0);
            const double phase = 0.37 * k1 + 0.61 * k2; // fixed, reproducible
            f.set_coeff(k1, k2, Complex{mag * std::cos(phase), mag * std::sin(phase)});
        }
    return f;
}

} // namespace galerkin
