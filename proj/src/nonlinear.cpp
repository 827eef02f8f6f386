#include "galerkin/nonlinear.hpp"

#include "galerkin/errors.hpp"
#include "galerkin/transform.hpp"
#include "galerkin/velocity.hpp"

namespace galerkin {

namespace {

SpectralField derivative(const SpectralField& f, int axis) {
    const int h = f.half_width();
    SpectralField out(f.grid());
    const Complex i{0.0, 1.0};
    for (int k2 = 0; k2 <= h; ++k2)
        for (int k1 = -h; k1 <= h; ++k1) {
            const double k = (axis == 0) ? k1 : k2;
            out.data()[out.index(k1, k2)] = i * k * f.data()[f.index(k1, k2)];
        }
    return out;
}

} // namespace

SpectralField transport(const SpectralField& a, const SpectralField& b,
                        NonlinearMode mode, DealiasRule rule) {
    if (a.grid() != b.grid()) throw ConfigError("transport: fields must share one grid");
    const WaveGrid& grid = a.grid();
    const int m = (mode == NonlinearMode::Raw) ? grid.product_transform_size()
                                               : grid.transform_size(rule == DealiasRule::TwoThirds);

    const VelocityField u = velocity_from_vorticity(a);
    const PhysicalGrid u1 = to_physical(u.u1, m);
    const PhysicalGrid u2 = to_physical(u.u2, m);
    const PhysicalGrid bx = to_physical(derivative(b, 0), m);
    const PhysicalGrid by = to_physical(derivative(b, 1), m);

    PhysicalGrid prod(m);
    for (std::size_t i = 0; i < prod.v.size(); ++i) prod.v[i] = u1.v[i] * bx.v[i] + u2.v[i] * by.v[i];

    if (mode == NonlinearMode::Raw) {
        const WaveGrid doubled = WaveGrid::square(2 * grid.resolution());
        return from_physical(prod, doubled);
    }
    return from_physical(prod, grid);
}

SpectralField nonlinear_term(const SpectralField& omega, NonlinearMode mode, DealiasRule rule) {
    return transport(omega, omega, mode, rule);
}

SpectralField symmetric_transport(const SpectralField& a, const SpectralField& b,
                                  NonlinearMode mode, DealiasRule rule) {
    SpectralField s = transport(a, b, mode, rule);
    s += transport(b, a, mode, rule);
    return s;
}

SpectralField compute_forcing(const SpectralField& omega, double nu, DealiasRule rule) {
    SpectralField g = apply_A_power(omega, 1.0);
    g *= nu;
    g += nonlinear_term(omega, NonlinearMode::Projected, rule);
    return g;
}

} // namespace galerkin
