#pragma once

#include <vector>

#include "galerkin/errors.hpp"

namespace galerkin {

/// Strictly decreasing exponents s_0 > s_1 > ... >= 0 selecting the nested
/// norm hierarchy |A^{s_k} . |.
class SobolevScale {
public:
    explicit SobolevScale(std::vector<double> exponents) : s_(std::move(exponents)) {
        if (s_.empty()) throw ConfigError("SobolevScale: at least one exponent required");
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] < 0.0) throw ConfigError("SobolevScale: exponents must be nonnegative");
            if (i > 0 && s_[i] >= s_[i - 1]) throw ConfigError("SobolevScale: exponents must decrease strictly");
        }
    }

    std::size_t size() const { return s_.size(); }
    double operator[](std::size_t k) const { return s_[k]; }
    const std::vector<double>& exponents() const { return s_; }

    /// Default ladder scale: s_0, then steps of 1/4 down (clipped at 0).
    static SobolevScale default_steady(double s0 = 1.0, std::size_t count = 4) {
        std::vector<double> s;
        for (std::size_t k = 0; k < count; ++k) {
            const double v = s0 - 0.25 * static_cast<double>(k);
            if (v < 0.0) break;
            s.push_back(v);
        }
        return SobolevScale(std::move(s));
    }

private:
    std::vector<double> s_;
};

} // namespace galerkin
