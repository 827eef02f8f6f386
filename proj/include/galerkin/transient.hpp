#pragma once

#include <filesystem>
#include <vector>

#include "galerkin/solver.hpp"

namespace galerkin {

/// Uniform samples of an evolving vorticity on [0,T], endpoints included.
struct Trajectory {
    WaveGrid grid;
    double sample_dt = 0.0;
    std::vector<SpectralField> samples;
    bool complete = true; // false when the run blew up mid-flight

    double duration() const { return sample_dt * (samples.empty() ? 0 : samples.size() - 1); }
};

/// Fixed-step AB3 run on [0,T]; the initial datum is projected onto the grid
/// and the state is stored every `sample_stride` steps, including t=0 and
/// t=T.  A blow-up aborts the run and returns the partial trajectory with
/// `complete = false`.
Trajectory run_transient(const WaveGrid& grid, const SpectralField& initial,
                         const SpectralField& forcing, double T,
                         const SolverConfig& config, long sample_stride);

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj);
Trajectory read_trajectory(const std::filesystem::path& dir);

} // namespace galerkin
