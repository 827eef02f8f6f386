#pragma once

#include "galerkin/spectral_field.hpp"

namespace galerkin {

/// Divergence-free velocity pair recovered from a scalar vorticity.
struct VelocityField {
    SpectralField u1;
    SpectralField u2;
};

/// u = (d/dy psi, -d/dx psi) with -Laplace psi = omega.  curl u = omega and
/// div u = 0 hold mode by mode.
VelocityField velocity_from_vorticity(const SpectralField& omega);

/// |A^a u| over the pair, same Parseval convention as the scalar frac_norm.
double frac_norm_velocity(const VelocityField& u, double alpha);

/// d/dx u2 - d/dy u1; reproduces the generating vorticity to round-off.
SpectralField curl(const VelocityField& u);

/// i k . u-hat; identically zero for velocity_from_vorticity output.
SpectralField divergence(const VelocityField& u);

} // namespace galerkin
