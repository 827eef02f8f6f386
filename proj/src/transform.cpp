#include "galerkin/transform.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "galerkin/errors.hpp"

namespace galerkin {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// One FFTW plan pair per grid size; plans use FFTW_ESTIMATE so planning is
// timing-independent and runs are reproducible.
struct Fft2 {
    int m;
    double* real_buf;
    fftw_complex* cplx_buf;
    fftw_plan fwd;  // r2c
    fftw_plan bwd;  // c2r (destroys cplx_buf)

    explicit Fft2(int m_) : m(m_) {
        real_buf = fftw_alloc_real(static_cast<std::size_t>(m) * m);
        cplx_buf = fftw_alloc_complex(static_cast<std::size_t>(m) * (m / 2 + 1));
        fwd = fftw_plan_dft_r2c_2d(m, m, real_buf, cplx_buf, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_2d(m, m, cplx_buf, real_buf, FFTW_ESTIMATE);
    }
    ~Fft2() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real_buf);
        fftw_free(cplx_buf);
    }
    Fft2(const Fft2&) = delete;
    Fft2& operator=(const Fft2&) = delete;
};

struct Fft1 {
    int n;
    fftw_complex* buf;
    fftw_plan plan; // unnormalized e^{+2pi i m j / N}

    explicit Fft1(int n_) : n(n_) {
        buf = fftw_alloc_complex(static_cast<std::size_t>(n));
        plan = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft1() {
        fftw_destroy_plan(plan);
        fftw_free(buf);
    }
    Fft1(const Fft1&) = delete;
    Fft1& operator=(const Fft1&) = delete;
};

std::mutex g_fft_mutex;

Fft2& plan2_for(int m) {
    static std::map<int, std::unique_ptr<Fft2>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, std::make_unique<Fft2>(m)).first;
    return *it->second;
}

Fft1& plan1_for(int n) {
    static std::map<int, std::unique_ptr<Fft1>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Fft1>(n)).first;
    return *it->second;
}

} // namespace

double PhysicalGrid::x(int ix) const { return two_pi * ix / m; }
double PhysicalGrid::y(int iy) const { return two_pi * iy / m; }

PhysicalGrid sample_physical(int m, const std::function<double(double, double)>& f) {
    PhysicalGrid g(m);
    for (int ix = 0; ix < m; ++ix)
        for (int iy = 0; iy < m; ++iy) g.at(ix, iy) = f(g.x(ix), g.y(iy));
    return g;
}

double physical_l2_norm(const PhysicalGrid& g) {
    double acc = 0.0;
    for (double v : g.v) acc += v * v;
    const double cell = two_pi / g.m;
    return std::sqrt(acc * cell * cell);
}

PhysicalGrid to_physical(const SpectralField& f, int m) {
    const int h = f.half_width();
    if (m < 2 * h + 2) throw ConfigError("to_physical: grid size " + std::to_string(m) + " cannot hold modes up to " + std::to_string(h));
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    Fft2& fft = plan2_for(m);
    const std::size_t nc = static_cast<std::size_t>(m) * (m / 2 + 1);
    for (std::size_t i = 0; i < nc; ++i) {
        fft.cplx_buf[i][0] = 0.0;
        fft.cplx_buf[i][1] = 0.0;
    }
    const int cols = m / 2 + 1;
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            if (!f.grid().retains(k1, k2)) continue;
            const Complex c = f.data()[f.index(k1, k2)];
            const int i = (k1 >= 0) ? k1 : k1 + m;
            fftw_complex* slot = fft.cplx_buf + (static_cast<std::size_t>(i) * cols + k2);
            (*slot)[0] = c.real();
            (*slot)[1] = c.imag();
        }
    fftw_execute(fft.bwd);
    PhysicalGrid out(m);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = fft.real_buf[i];
    return out;
}

SpectralField from_physical(const PhysicalGrid& samples, const WaveGrid& grid) {
    const int m = samples.m;
    const int h = grid.half_width();
    if (m < 2 * h + 2) throw ConfigError("from_physical: grid size too small for the retained modes");
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    Fft2& fft = plan2_for(m);
    for (std::size_t i = 0; i < samples.v.size(); ++i) fft.real_buf[i] = samples.v[i];
    fftw_execute(fft.fwd);
    SpectralField out(grid);
    const int cols = m / 2 + 1;
    const double scale = 1.0 / (static_cast<double>(m) * m);
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            if (k1 == 0 && k2 == 0) continue;
            if (!grid.retains(k1, k2)) continue;
            const int i = (k1 >= 0) ? k1 : k1 + m;
            const fftw_complex& c = fft.cplx_buf[static_cast<std::size_t>(i) * cols + k2];
            out.data()[out.index(k1, k2)] = Complex{c[0] * scale, c[1] * scale};
        }
    out.enforce_invariants();
    return out;
}

void fourier_time_transform(std::vector<Complex>& inout) {
    if (inout.empty()) return;
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    Fft1& fft = plan1_for(static_cast<int>(inout.size()));
    for (std::size_t j = 0; j < inout.size(); ++j) {
        fft.buf[j][0] = inout[j].real();
        fft.buf[j][1] = inout[j].imag();
    }
    fftw_execute(fft.plan);
    for (std::size_t j = 0; j < inout.size(); ++j) inout[j] = Complex{fft.buf[j][0], fft.buf[j][1]};
}

} // namespace galerkin
