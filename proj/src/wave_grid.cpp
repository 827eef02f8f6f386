#include "galerkin/wave_grid.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "galerkin/errors.hpp"

namespace galerkin {

WaveGrid::WaveGrid(int n, Truncation shape, double lambda_bound)
    : n_(n), shape_(shape), lambda_bound_(lambda_bound), half_(n / 2) {}

WaveGrid WaveGrid::square(int n) {
    if (n <= 0 || n % 2 != 0) throw ConfigError("grid resolution must be a positive even integer, got " + std::to_string(n));
    return WaveGrid(n, Truncation::Square, 0.0);
}

WaveGrid WaveGrid::ball(int n, double lambda_bound) {
    if (n <= 0 || n % 2 != 0) throw ConfigError("grid resolution must be a positive even integer, got " + std::to_string(n));
    if (lambda_bound < 1.0) throw ConfigError("ball truncation bound must retain at least |k|^2 = 1");
    const double h = n / 2;
    if (lambda_bound > h * h)
        throw ConfigError("ball truncation bound exceeds the square of half-width n/2");
    return WaveGrid(n, Truncation::Ball, lambda_bound);
}

double WaveGrid::lambda_cut() const {
    if (shape_ == Truncation::Square) {
        const double e = half_ + 1;
        return e * e; // nearest excluded lattice point is (h+1, 0)
    }
    // Ball: smallest lattice |k|^2 strictly above the bound.
    const int r = static_cast<int>(std::floor(std::sqrt(lambda_bound_))) + 2;
    double best = std::numeric_limits<double>::infinity();
    for (int k1 = 0; k1 <= r; ++k1)
        for (int k2 = 0; k2 <= r; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            const double v = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            if (v > lambda_bound_ && v < best) best = v;
        }
    return best;
}

long WaveGrid::dimension() const {
    long count = 0;
    for (int k2 = -half_; k2 <= half_; ++k2)
        for (int k1 = -half_; k1 <= half_; ++k1)
            if (retains(k1, k2)) ++count;
    return count;
}

int WaveGrid::transform_size(bool dealiased) const {
    return dealiased ? next_fast_even(3 * half_ + 1) : next_fast_even(2 * half_ + 2);
}

int WaveGrid::product_transform_size() const {
    return next_fast_even(4 * half_ + 2);
}

bool WaveGrid::contains(const WaveGrid& inner) const {
    if (inner.half_ > half_) {
        // A wider rectangle may still retain nothing outside our set (ball).
        for (int k2 = 0; k2 <= inner.half_; ++k2)
            for (int k1 = -inner.half_; k1 <= inner.half_; ++k1)
                if (inner.retains(k1, k2) && !retains(k1, k2)) return false;
        return true;
    }
    for (int k2 = 0; k2 <= inner.half_; ++k2)
        for (int k1 = -inner.half_; k1 <= inner.half_; ++k1)
            if (inner.retains(k1, k2) && !retains(k1, k2)) return false;
    return true;
}

std::string WaveGrid::describe() const {
    std::ostringstream os;
    if (shape_ == Truncation::Square)
        os << "square(n=" << n_ << ", half=" << half_ << ")";
    else
        os << "ball(n=" << n_ << ", lambda<=" << lambda_bound_ << ")";
    return os.str();
}

int next_fast_even(int x) {
    int m = (x <= 2) ? 2 : x + (x % 2);
    for (;; m += 2) {
        int r = m;
        for (int p : {2, 3, 5, 7})
            while (r % p == 0) r /= p;
        if (r == 1) return m;
    }
}

} // namespace galerkin
