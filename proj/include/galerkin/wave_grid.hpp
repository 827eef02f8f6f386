#pragma once

#include <cstdint>
#include <string>

namespace galerkin {

enum class Truncation : std::uint32_t { Square = 0, Ball = 1 };

/// Retained-wavevector lattice for a real, zero-mean scalar field on [0,2pi]^2.
///
/// A grid of resolution n keeps modes k in Z^2\{0} inside either the square
/// max(|k1|,|k2|) <= n/2, or the ball |k|^2 <= lambda_bound.  The retained set
/// is symmetric under k -> -k and never contains the zero mode.
class WaveGrid {
public:
    static WaveGrid square(int n);
    static WaveGrid ball(int n, double lambda_bound);

    int resolution() const { return n_; }
    Truncation shape() const { return shape_; }
    double ball_bound() const { return lambda_bound_; }

    /// Half-width of the coefficient storage rectangle (= n/2).
    int half_width() const { return half_; }

    bool retains(int k1, int k2) const {
        if (k1 == 0 && k2 == 0) return false;
        if (k1 < -half_ || k1 > half_ || k2 < -half_ || k2 > half_) return false;
        if (shape_ == Truncation::Ball)
            return static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2 <= lambda_bound_;
        return true;
    }

    /// Smallest Stokes eigenvalue |k|^2 over excluded modes.  Drives every
    /// tail-rate diagnostic as the lambda_{n+1} surrogate.
    double lambda_cut() const;

    /// Number of retained modes (full plane), i.e. dim P_n.
    long dimension() const;

    /// Physical transform size for this grid: minimal (aliased) or padded so
    /// that quadratic products are alias-free on the retained set.
    int transform_size(bool dealiased) const;

    /// Size on which exact quadratic products of two grid fields are fully
    /// resolved up to mode 2*half_width (raw nonlinear term).
    int product_transform_size() const;

    bool operator==(const WaveGrid& o) const {
        return n_ == o.n_ && shape_ == o.shape_ && lambda_bound_ == o.lambda_bound_;
    }
    bool operator!=(const WaveGrid& o) const { return !(*this == o); }

    /// True when every mode retained by `inner` is also retained here.
    bool contains(const WaveGrid& inner) const;

    std::string describe() const;

private:
    WaveGrid(int n, Truncation shape, double lambda_bound);

    int n_ = 0;
    Truncation shape_ = Truncation::Square;
    double lambda_bound_ = 0.0; // ball only
    int half_ = 0;
};

/// Smallest even 7-smooth integer >= x (fast FFT sizes).
int next_fast_even(int x);

} // namespace galerkin
