#pragma once

#include "galerkin/spectral_field.hpp"

namespace galerkin {

enum class DealiasRule { TwoThirds, None };

/// Projected: the transport term composed with the grid projector (the
/// Galerkin nonlinearity).  Raw: the exact quadratic product on a doubled
/// grid, no projection.
enum class NonlinearMode { Projected, Raw };

/// Transport a scalar field b by the velocity induced by vorticity a:
/// u(a) . grad b, formed as a physical-space product.  With TwoThirds the
/// product grid is padded so retained modes are alias-free; with None the
/// minimal grid is used and aliasing is accepted.
SpectralField transport(const SpectralField& a, const SpectralField& b,
                        NonlinearMode mode = NonlinearMode::Projected,
                        DealiasRule rule = DealiasRule::TwoThirds);

/// u(omega) . grad omega.
SpectralField nonlinear_term(const SpectralField& omega,
                             NonlinearMode mode = NonlinearMode::Projected,
                             DealiasRule rule = DealiasRule::TwoThirds);

/// u(a).grad b + u(b).grad a (symmetrized transport).
SpectralField symmetric_transport(const SpectralField& a, const SpectralField& b,
                                  NonlinearMode mode = NonlinearMode::Projected,
                                  DealiasRule rule = DealiasRule::TwoThirds);

/// Forcing that balances omega as an exact steady state:
/// nu * A omega + u(omega) . grad omega, on omega's grid.
SpectralField compute_forcing(const SpectralField& omega, double nu,
                              DealiasRule rule = DealiasRule::TwoThirds);

} // namespace galerkin
