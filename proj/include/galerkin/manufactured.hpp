#pragma once

#include "galerkin/spectral_field.hpp"

namespace galerkin {

/// Cubic spline 1 - 3s^2 + 2s^3 on [0,1]: sigma(0)=1, sigma(1)=0, flat ends.
double spline_sigma(double s);

/// Even reflection of [0,2pi] onto [0,1]: z/pi up to pi, (2pi-z)/pi after.
double reflection_phi(double z);

/// Pointwise value of the reference vorticity
/// sigma(phi(x)) sigma(phi(y)) (1 + cos(8x)cos(6y)/4).
double manufactured_vorticity_point(double x, double y);

/// Sample the reference vorticity on the grid's dealiased collocation grid,
/// transform, and drop the mean mode.
SpectralField manufactured_vorticity(const WaveGrid& grid);

/// Single-mode field c * cos(k1 x + k2 y).
SpectralField cosine_field(const WaveGrid& grid, int k1, int k2, double amplitude = 1.0);

/// Field with |c_k| = |k|^p and deterministic phases (algebraic tail spec).
SpectralField algebraic_tail_field(const WaveGrid& grid, double power);

} // namespace galerkin
