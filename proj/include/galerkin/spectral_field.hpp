#pragma once

#include <complex>
#include <vector>

#include "galerkin/wave_grid.hpp"

namespace galerkin {

using Complex = std::complex<double>;

/// Complex Fourier coefficients of a real, zero-mean scalar field on [0,2pi]^2.
///
/// Storage is the Hermitian half-plane k2 in [0,h], k1 in [-h,h] (row-major in
/// k2).  The k2 = 0 row is kept conjugate-symmetric, c(-k1,0) = conj(c(k1,0)),
/// and the zero mode is identically zero, so the field is real with zero mean.
/// Full-plane values at k2 < 0 are conj(stored(-k1,-k2)).
///
/// Norm convention: frac_norm(f, 0) equals the L^2([0,2pi]^2) norm of the
/// physical field (Parseval with the 2pi factor), and frac_norm(f, a) applies
/// the Stokes multiplier |k|^(2a) per mode, i.e. |A^a f|.
class SpectralField {
public:
    explicit SpectralField(const WaveGrid& grid);

    const WaveGrid& grid() const { return grid_; }
    int half_width() const { return grid_.half_width(); }

    /// Full-plane coefficient (any k1,k2 in [-h,h]; 0 outside the retained set).
    Complex coeff(int k1, int k2) const;
    /// Assign a full-plane coefficient; the Hermitian mirror is kept in sync.
    void set_coeff(int k1, int k2, Complex v);

    std::size_t storage_size() const { return data_.size(); }
    const Complex* data() const { return data_.data(); }
    Complex* data() { return data_.data(); }

    /// Stored index for k2 >= 0 entries.
    std::size_t index(int k1, int k2) const {
        const int h = grid_.half_width();
        return static_cast<std::size_t>(k2) * (2 * h + 1) + static_cast<std::size_t>(k1 + h);
    }
    /// Full-plane multiplicity of a stored entry (2 for k2 > 0, else 1).
    static double multiplicity(int k2) { return k2 > 0 ? 2.0 : 1.0; }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    /// this += a * o
    void axpy(double a, const SpectralField& o);

    bool is_finite() const;
    /// Max deviation from Hermitian symmetry on the k2 = 0 row (diagnostic).
    double hermitian_defect() const;
    /// Re-impose k2 = 0 conjugate symmetry, zero mean, and the retained mask.
    void enforce_invariants();

    void fill(Complex v);

private:
    WaveGrid grid_;
    std::vector<Complex> data_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// |A^a f| = 2pi * (sum |k|^(4a) |c_k|^2)^(1/2); a >= 0.
double frac_norm(const SpectralField& f, double alpha);

/// L^2 inner product (2pi)^2 sum c_k conj(d_k); both fields on one grid.
double inner_l2(const SpectralField& f, const SpectralField& g);

/// Coefficient-wise multiply by |k|^(2a); a may be negative (no zero mode).
SpectralField apply_A_power(const SpectralField& f, double alpha);

/// Zero all modes outside the cutoff's retained set; result stays on f's grid.
SpectralField project(const SpectralField& f, const WaveGrid& cutoff);
/// f - project(f, cutoff); the tail Q_n f.
SpectralField complement(const SpectralField& f, const WaveGrid& cutoff);

/// Move to a new grid: zero-pad when enlarging, truncate when shrinking.
SpectralField resample(const SpectralField& f, const WaveGrid& target);

} // namespace galerkin
