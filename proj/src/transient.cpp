#include "galerkin/transient.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "galerkin/errors.hpp"
#include "galerkin/field_io.hpp"
#include "galerkin/ladder.hpp"

namespace galerkin {

using nlohmann::json;

Trajectory run_transient(const WaveGrid& grid, const SpectralField& initial,
                         const SpectralField& forcing, double T,
                         const SolverConfig& config, long sample_stride) {
    config.validate();
    if (T <= 0.0) throw ConfigError("run_transient: T must be positive");
    if (sample_stride < 1) throw ConfigError("run_transient: sample stride must be >= 1");
    const double steps_real = T / config.dt;
    const long steps = std::lround(steps_real);
    if (std::abs(steps_real - steps) > 1e-9 * std::max(1.0, steps_real) || steps < 1)
        throw ConfigError("run_transient: T must be an integer number of time steps");
    if (steps % sample_stride != 0)
        throw ConfigError("run_transient: sample stride must divide the step count so t=T is sampled");

    TimeStepper stepper(grid, resample(forcing, grid), config);
    stepper.set_state(initial);

    Trajectory traj{grid, config.dt * sample_stride};
    traj.samples.push_back(stepper.state());
    try {
        for (long s = 1; s <= steps; ++s) {
            stepper.step();
            if (s % sample_stride == 0) traj.samples.push_back(stepper.state());
        }
    } catch (const BlowUpError&) {
        traj.complete = false;
    }
    return traj;
}

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir / "samples", ec);
    if (ec) throw MissingArtifactError("cannot create trajectory directory " + dir.string());
    json manifest;
    manifest["code_version"] = code_version();
    manifest["n"] = traj.grid.resolution();
    manifest["sample_dt"] = traj.sample_dt;
    manifest["count"] = traj.samples.size();
    manifest["complete"] = traj.complete;
    for (std::size_t j = 0; j < traj.samples.size(); ++j) {
        char name[32];
        std::snprintf(name, sizeof(name), "samples/t%06zu.field", j);
        write_field(dir / name, traj.samples[j]);
    }
    std::ofstream os(dir / "manifest.json", std::ios::trunc);
    os << manifest.dump(2) << "\n";
    if (!os) throw MissingArtifactError("cannot write trajectory manifest in " + dir.string());
}

Trajectory read_trajectory(const std::filesystem::path& dir) {
    std::ifstream is(dir / "manifest.json");
    if (!is) throw MissingArtifactError("missing trajectory manifest in " + dir.string());
    json manifest;
    is >> manifest;
    Trajectory traj{WaveGrid::square(manifest.at("n").get<int>()), manifest.at("sample_dt").get<double>()};
    traj.complete = manifest.at("complete").get<bool>();
    const std::size_t count = manifest.at("count").get<std::size_t>();
    for (std::size_t j = 0; j < count; ++j) {
        char name[32];
        std::snprintf(name, sizeof(name), "samples/t%06zu.field", j);
        traj.samples.push_back(read_field(dir / name));
    }
    return traj;
}

} // namespace galerkin
