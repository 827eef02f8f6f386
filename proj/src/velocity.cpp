#include "galerkin/velocity.hpp"

#include <cmath>

namespace galerkin {

VelocityField velocity_from_vorticity(const SpectralField& omega) {
    const int h = omega.half_width();
    SpectralField u1(omega.grid()), u2(omega.grid());
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            const Complex w = omega.data()[omega.index(k1, k2)];
            if (w == Complex{0.0, 0.0}) continue;
            const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            const Complex psi = w / ksq;
            const Complex i{0.0, 1.0};
            u1.data()[u1.index(k1, k2)] = i * static_cast<double>(k2) * psi;
            u2.data()[u2.index(k1, k2)] = -i * static_cast<double>(k1) * psi;
        }
    return {std::move(u1), std::move(u2)};
}

double frac_norm_velocity(const VelocityField& u, double alpha) {
    const double a = frac_norm(u.u1, alpha);
    const double b = frac_norm(u.u2, alpha);
    return std::sqrt(a * a + b * b);
}

SpectralField curl(const VelocityField& u) {
    const int h = u.u1.half_width();
    SpectralField out(u.u1.grid());
    const Complex i{0.0, 1.0};
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            out.data()[out.index(k1, k2)] =
                i * static_cast<double>(k1) * u.u2.data()[u.u2.index(k1, k2)] -
                i * static_cast<double>(k2) * u.u1.data()[u.u1.index(k1, k2)];
        }
    return out;
}

SpectralField divergence(const VelocityField& u) {
    const int h = u.u1.half_width();
    SpectralField out(u.u1.grid());
    const Complex i{0.0, 1.0};
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            out.data()[out.index(k1, k2)] =
                i * static_cast<double>(k1) * u.u1.data()[u.u1.index(k1, k2)] +
                i * static_cast<double>(k2) * u.u2.data()[u.u2.index(k1, k2)];
        }
    return out;
}

} // namespace galerkin
