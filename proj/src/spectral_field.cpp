#include "galerkin/spectral_field.hpp"

#include <cmath>
#include <numbers>

#include "galerkin/errors.hpp"

namespace galerkin {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

SpectralField::SpectralField(const WaveGrid& grid)
    : grid_(grid),
      data_(static_cast<std::size_t>(2 * grid.half_width() + 1) * (grid.half_width() + 1), Complex{0.0, 0.0}) {}

Complex SpectralField::coeff(int k1, int k2) const {
    if (!grid_.retains(k1, k2)) return {0.0, 0.0};
    if (k2 < 0) return std::conj(data_[index(-k1, -k2)]);
    return data_[index(k1, k2)];
}

void SpectralField::set_coeff(int k1, int k2, Complex v) {
    if (!grid_.retains(k1, k2))
        throw ConfigError("set_coeff: mode (" + std::to_string(k1) + "," + std::to_string(k2) +
                          ") is not retained by " + grid_.describe());
    if (k2 < 0) {
        data_[index(-k1, -k2)] = std::conj(v);
        return;
    }
    data_[index(k1, k2)] = v;
    if (k2 == 0) data_[index(-k1, 0)] = std::conj(v);
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (grid_ != o.grid_) throw ConfigError("field arithmetic requires matching grids");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (grid_ != o.grid_) throw ConfigError("field arithmetic requires matching grids");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : data_) c *= s;
    return *this;
}

void SpectralField::axpy(double a, const SpectralField& o) {
    if (grid_ != o.grid_) throw ConfigError("field arithmetic requires matching grids");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * o.data_[i];
}

bool SpectralField::is_finite() const {
    for (const auto& c : data_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

double SpectralField::hermitian_defect() const {
    const int h = grid_.half_width();
    double worst = 0.0;
    for (int k1 = 1; k1 <= h; ++k1)
        worst = std::max(worst, std::abs(data_[index(-k1, 0)] - std::conj(data_[index(k1, 0)])));
    worst = std::max(worst, std::abs(data_[index(0, 0)]));
    return worst;
}

void SpectralField::enforce_invariants() {
    const int h = grid_.half_width();
    data_[index(0, 0)] = {0.0, 0.0};
    for (int k1 = 1; k1 <= h; ++k1) {
        const Complex avg = 0.5 * (data_[index(k1, 0)] + std::conj(data_[index(-k1, 0)]));
        data_[index(k1, 0)] = avg;
        data_[index(-k1, 0)] = std::conj(avg);
    }
    if (grid_.shape() == Truncation::Ball) {
        for (int k2 = 0; k2 <= h; ++k2)
            for (int k1 = -h; k1 <= h; ++k1)
                if (!grid_.retains(k1, k2)) data_[index(k1, k2)] = {0.0, 0.0};
    }
}

void SpectralField::fill(Complex v) {
    for (auto& c : data_) c = v;
    enforce_invariants();
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

double frac_norm(const SpectralField& f, double alpha) {
    if (alpha < 0.0) throw ConfigError("frac_norm: negative exponent rejected");
    const int h = f.half_width();
    double acc = 0.0;
    for (int k2 = 0; k2 <= h; ++k2) {
        const double mult = SpectralField::multiplicity(k2);
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            const Complex c = f.data()[f.index(k1, k2)];
            const double a2 = std::norm(c);
            if (a2 == 0.0) continue;
            const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            acc += mult * std::pow(ksq, 2.0 * alpha) * a2;
        }
    }
    return two_pi * std::sqrt(acc);
}

double inner_l2(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid()) throw ConfigError("inner_l2: grids must match");
    const int h = f.half_width();
    double acc = 0.0;
    for (int k2 = 0; k2 <= h; ++k2) {
        const double mult = SpectralField::multiplicity(k2);
        for (int k1 = -h; k1 <= h; ++k1) {
            const Complex a = f.data()[f.index(k1, k2)];
            const Complex b = g.data()[g.index(k1, k2)];
            acc += mult * (a.real() * b.real() + a.imag() * b.imag());
        }
    }
    return two_pi * two_pi * acc;
}

SpectralField apply_A_power(const SpectralField& f, double alpha) {
    const int h = f.half_width();
    SpectralField out(f.grid());
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            const Complex c = f.data()[f.index(k1, k2)];
            if (c == Complex{0.0, 0.0}) continue;
            const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            out.data()[out.index(k1, k2)] = std::pow(ksq, alpha) * c;
        }
    return out;
}

SpectralField project(const SpectralField& f, const WaveGrid& cutoff) {
    if (!f.grid().contains(cutoff))
        throw ConfigError("project: cutoff " + cutoff.describe() + " is not contained in " + f.grid().describe() +
                          "; resample first");
    const int h = f.half_width();
    SpectralField out(f.grid());
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1)
            if (cutoff.retains(k1, k2)) out.data()[out.index(k1, k2)] = f.data()[f.index(k1, k2)];
    return out;
}

SpectralField complement(const SpectralField& f, const WaveGrid& cutoff) {
    if (!f.grid().contains(cutoff))
        throw ConfigError("complement: cutoff " + cutoff.describe() + " is not contained in " + f.grid().describe() +
                          "; resample first");
    const int h = f.half_width();
    SpectralField out(f.grid());
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1)
            if (f.grid().retains(k1, k2) && !cutoff.retains(k1, k2))
                out.data()[out.index(k1, k2)] = f.data()[f.index(k1, k2)];
    return out;
}

SpectralField resample(const SpectralField& f, const WaveGrid& target) {
    SpectralField out(target);
    const int h = std::min(f.half_width(), target.half_width());
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1)
            if (f.grid().retains(k1, k2) && target.retains(k1, k2))
                out.data()[out.index(k1, k2)] = f.data()[f.index(k1, k2)];
    return out;
}

} // namespace galerkin
