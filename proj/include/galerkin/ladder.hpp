#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galerkin/solver.hpp"

namespace galerkin {

enum class ForcingKind { Manufactured, SingleMode, Zero };

struct LadderConfig {
    SolverConfig solver;
    std::vector<int> resolutions;
    int eval_resolution = 0; // must be >= 2x finest level
    ForcingKind forcing = ForcingKind::Manufactured;
    int force_k1 = 1; // single-mode forcing wavevector
    int force_k2 = 0;
    double force_amplitude = 1.0; // g = nu * amplitude * A cos(k.x)

    void validate() const;
};

/// True when n = 2^p 3^q (the fast-transform resolutions used for ladders).
bool is_2p3q(int n);

/// Ordered collection of converged steady states at increasing truncation,
/// together with the shared forcing and the fine-grid reference fields.
struct LadderArchive {
    LadderConfig config;
    WaveGrid eval_grid;
    SpectralField omega_ref;  // reference vorticity on the evaluation grid
    SpectralField btilde_ref; // reference transport term (projected, eval grid)
    SpectralField g_ref;      // shared forcing, nu*A omega_ref + btilde_ref
    std::vector<SteadyStateRecord> records;
    std::vector<double> warm_start_gap; // ||resample(prev) - converged||_{L2}, per level > 0

    LadderArchive(LadderConfig cfg, WaveGrid eval, SpectralField w, SpectralField b, SpectralField g)
        : config(std::move(cfg)), eval_grid(eval), omega_ref(std::move(w)),
          btilde_ref(std::move(b)), g_ref(std::move(g)) {}
};

/// Build the reference fields for a forcing kind on the evaluation grid.
LadderArchive make_reference(const LadderConfig& config);

/// Warm-started resolution ladder; level one starts from zero.  Unconverged
/// levels are flagged and the ladder proceeds.
LadderArchive run_ladder(const LadderConfig& config, bool verbose = false);

/// Archive directory layout: manifest.json + reference/*.field +
/// levels/nXXXX.field + levels/nXXXX_residual.csv.  Timing goes to a separate
/// timing.txt so manifests stay bitwise reproducible.
void write_archive(const std::filesystem::path& dir, const LadderArchive& archive);
LadderArchive read_archive(const std::filesystem::path& dir);

/// FNV-1a hash of the canonical config encoding, recorded in manifests.
std::string config_hash(const LadderConfig& config);
std::string code_version();

} // namespace galerkin
