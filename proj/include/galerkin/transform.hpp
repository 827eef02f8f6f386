#pragma once

#include <functional>
#include <vector>

#include "galerkin/spectral_field.hpp"

namespace galerkin {

/// Real samples on the uniform m x m collocation grid of [0,2pi]^2,
/// row-major in x: value(ix, iy) with x = 2pi ix/m, y = 2pi iy/m.
struct PhysicalGrid {
    int m = 0;
    std::vector<double> v;

    explicit PhysicalGrid(int m_) : m(m_), v(static_cast<std::size_t>(m_) * m_, 0.0) {}
    double& at(int ix, int iy) { return v[static_cast<std::size_t>(ix) * m + iy]; }
    double at(int ix, int iy) const { return v[static_cast<std::size_t>(ix) * m + iy]; }
    double x(int ix) const;
    double y(int iy) const;
};

/// Evaluate f(x,y) on the m x m collocation grid.
PhysicalGrid sample_physical(int m, const std::function<double(double, double)>& f);

/// L^2([0,2pi]^2) norm of grid samples by the periodic rectangle rule.
double physical_l2_norm(const PhysicalGrid& g);

/// Synthesis: physical samples of the field on an m x m grid (m > 2*half+1).
PhysicalGrid to_physical(const SpectralField& f, int m);

/// Analysis: DFT of the samples restricted to the grid's retained modes;
/// the zero mode is dropped (zero spatial mean).
SpectralField from_physical(const PhysicalGrid& samples, const WaveGrid& grid);

/// Unnormalized 1-D transform sum_j c_j e^{+2pi i m j / N} (cached plans).
void fourier_time_transform(std::vector<Complex>& inout);

} // namespace galerkin
