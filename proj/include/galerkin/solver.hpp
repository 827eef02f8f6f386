#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "galerkin/nonlinear.hpp"
#include "galerkin/spectral_field.hpp"

namespace galerkin {

enum class ViscousTreatment { IntegratingFactor, Explicit };

struct SolverConfig {
    double nu = 0.01;
    double dt = 1e-3;
    DealiasRule dealias = DealiasRule::TwoThirds;
    ViscousTreatment viscous = ViscousTreatment::IntegratingFactor;
    double eps_steady = 1e-11;
    long max_steps = 20000000;
    NonlinearMode nonlinear = NonlinearMode::Projected; // b-tilde definition recorded with archives
    long residual_log_stride = 2000;

    void validate() const;
};

/// One AB3 step.  `tendencies` holds the transported tendency at the current
/// node and the two previous nodes, newest first.  With integrating-factor
/// treatment the entries are R = g - u.grad(omega) and the viscous factor
/// exp(-nu |k|^2 dt) is applied exactly per mode; with explicit treatment the
/// entries are the full tendency including -nu A omega.
SpectralField ab3_step(const SpectralField& omega,
                       const std::array<const SpectralField*, 3>& tendencies,
                       const SolverConfig& config);

/// Fixed-grid AB3 integrator for
///   d omega/dt + nu A omega + P_n(u . grad omega) = P_n g.
/// The first two macro steps are bootstrapped with an RK3 stage in the same
/// integrating-factor variable (substepped when nu*lambda_max*dt is large) so
/// the scheme starts at third order.
class TimeStepper {
public:
    TimeStepper(const WaveGrid& grid, SpectralField forcing, const SolverConfig& config);
    /// Time-dependent forcing variant; `forcing(t)` is evaluated at macro nodes.
    TimeStepper(const WaveGrid& grid, std::function<SpectralField(double)> forcing,
                const SolverConfig& config);

    void set_state(const SpectralField& omega0);
    const SpectralField& state() const { return omega_; }
    double time() const { return t_; }
    long steps_taken() const { return steps_; }

    /// Advance one dt; returns ||omega_new - omega_old||_{L2} / dt.
    double step();

private:
    SpectralField tendency(const SpectralField& w, double t) const;
    SpectralField forcing_at(double t) const;
    void rk3_advance();
    void ab3_advance();
    void apply_factor(SpectralField& f, const std::vector<double>& factor) const;
    std::vector<double> exp_factor(double s) const;

    WaveGrid grid_;
    SolverConfig cfg_;
    SpectralField forcing_const_;
    std::function<SpectralField(double)> forcing_fn_;
    SpectralField omega_;
    std::vector<SpectralField> hist_; // tendencies, newest first
    std::vector<double> lambda_;      // |k|^2 per storage slot
    std::vector<double> e1_, e2_, e3_;
    double t_ = 0.0;
    long steps_ = 0;
};

struct SteadyStateRecord {
    WaveGrid grid;
    SpectralField omega;
    double residual = 0.0;
    long steps = 0;
    double wall_seconds = 0.0;
    bool converged = false;
    bool energy_bound_ok = false;
    std::vector<std::pair<long, double>> residual_log;
};

/// Iterate AB3 until ||omega^{m+1}-omega^m||_{L2}/dt <= eps_steady or
/// max_steps; non-convergence is flagged on the record, not thrown.
SteadyStateRecord run_to_steady(const WaveGrid& grid, const SpectralField& forcing,
                                const SolverConfig& config, const SpectralField& initial);

} // namespace galerkin
