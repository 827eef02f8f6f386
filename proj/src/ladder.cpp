#include "galerkin/ladder.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "galerkin/errors.hpp"
#include "galerkin/field_io.hpp"
#include "galerkin/manufactured.hpp"

namespace galerkin {

using nlohmann::json;

std::string code_version() { return "galerkin-lab 0.1.0"; }

bool is_2p3q(int n) {
    if (n <= 0) return false;
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

void LadderConfig::validate() const {
    solver.validate();
    if (resolutions.empty()) throw ConfigError("ladder: at least one resolution required");
    for (std::size_t i = 0; i < resolutions.size(); ++i) {
        if (!is_2p3q(resolutions[i]) || resolutions[i] % 2 != 0)
            throw ConfigError("ladder: resolution " + std::to_string(resolutions[i]) +
                              " is not an even 2^p 3^q integer");
        if (i > 0 && resolutions[i] <= resolutions[i - 1])
            throw ConfigError("ladder: resolutions must increase strictly");
    }
    if (eval_resolution < 2 * resolutions.back())
        throw ConfigError("ladder: evaluation grid must be at least twice the finest level");
}

namespace {

std::string forcing_name(ForcingKind k) {
    switch (k) {
        case ForcingKind::Manufactured: return "manufactured";
        case ForcingKind::SingleMode: return "single-mode";
        case ForcingKind::Zero: return "zero";
    }
    return "?";
}

ForcingKind forcing_from_name(const std::string& s) {
    if (s == "manufactured") return ForcingKind::Manufactured;
    if (s == "single-mode") return ForcingKind::SingleMode;
    if (s == "zero") return ForcingKind::Zero;
    throw MissingArtifactError("unknown forcing kind in manifest: " + s);
}

std::string canonical_config(const LadderConfig& c) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "nu=" << c.solver.nu << ";dt=" << c.solver.dt
       << ";dealias=" << (c.solver.dealias == DealiasRule::TwoThirds ? "two-thirds" : "none")
       << ";viscous=" << (c.solver.viscous == ViscousTreatment::IntegratingFactor ? "integrating-factor" : "explicit")
       << ";eps_ss=" << c.solver.eps_steady << ";max_steps=" << c.solver.max_steps
       << ";nonlinear=" << (c.solver.nonlinear == NonlinearMode::Projected ? "projected" : "raw")
       << ";forcing=" << forcing_name(c.forcing)
       << ";fk=" << c.force_k1 << "," << c.force_k2 << ";famp=" << c.force_amplitude
       << ";eval=" << c.eval_resolution << ";levels=";
    for (int n : c.resolutions) os << n << ",";
    return os.str();
}

} // namespace

std::string config_hash(const LadderConfig& config) {
    const std::string s = canonical_config(config);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

LadderArchive make_reference(const LadderConfig& config) {
    config.validate();
    const WaveGrid eval = WaveGrid::square(config.eval_resolution);
    switch (config.forcing) {
        case ForcingKind::Manufactured: {
            SpectralField w = manufactured_vorticity(eval);
            SpectralField b = nonlinear_term(w, NonlinearMode::Projected, config.solver.dealias);
            SpectralField g = apply_A_power(w, 1.0);
            g *= config.solver.nu;
            g += b;
            return LadderArchive(config, eval, std::move(w), std::move(b), std::move(g));
        }
        case ForcingKind::SingleMode: {
            // Single-mode states have vanishing transport, so b-tilde is 0
            // exactly and g = nu * |k|^2 * amplitude * cos(k.x).
            SpectralField w = cosine_field(eval, config.force_k1, config.force_k2, config.force_amplitude);
            SpectralField b(eval);
            SpectralField g = apply_A_power(w, 1.0);
            g *= config.solver.nu;
            return LadderArchive(config, eval, std::move(w), std::move(b), std::move(g));
        }
        case ForcingKind::Zero:
            return LadderArchive(config, eval, SpectralField(eval), SpectralField(eval), SpectralField(eval));
    }
    throw ConfigError("unreachable forcing kind");
}

LadderArchive run_ladder(const LadderConfig& config, bool verbose) {
    LadderArchive archive = make_reference(config);
    for (std::size_t j = 0; j < config.resolutions.size(); ++j) {
        const WaveGrid grid = WaveGrid::square(config.resolutions[j]);
        const SpectralField warm = archive.records.empty()
                                       ? SpectralField(grid)
                                       : resample(archive.records.back().omega, grid);
        SteadyStateRecord rec = run_to_steady(grid, archive.g_ref, config.solver, warm);
        if (j > 0) archive.warm_start_gap.push_back(frac_norm(rec.omega - warm, 0.0));
        if (verbose)
            std::fprintf(stderr, "[ladder] n=%d steps=%ld residual=%.3e converged=%d wall=%.1fs\n",
                         grid.resolution(), rec.steps, rec.residual, rec.converged ? 1 : 0,
                         rec.wall_seconds);
        archive.records.push_back(std::move(rec));
    }
    return archive;
}

void write_archive(const std::filesystem::path& dir, const LadderArchive& archive) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir / "levels", ec);
    fs::create_directories(dir / "reference", ec);
    if (ec) throw MissingArtifactError("cannot create archive directory " + dir.string());

    write_field(dir / "reference" / "omega.field", archive.omega_ref);
    write_field(dir / "reference" / "btilde.field", archive.btilde_ref);
    write_field(dir / "reference" / "forcing.field", archive.g_ref);

    json levels = json::array();
    std::ofstream timing(dir / "timing.txt", std::ios::trunc);
    for (const auto& rec : archive.records) {
        char name[32];
        std::snprintf(name, sizeof(name), "n%04d", rec.grid.resolution());
        write_field(dir / "levels" / (std::string(name) + ".field"), rec.omega);
        {
            std::ofstream csv(dir / "levels" / (std::string(name) + "_residual.csv"), std::ios::trunc);
            csv << "step,residual\n" << std::setprecision(17);
            for (const auto& [step, r] : rec.residual_log) csv << step << "," << r << "\n";
        }
        timing << name << " wall_seconds=" << rec.wall_seconds << "\n";
        json lv;
        lv["n"] = rec.grid.resolution();
        lv["file"] = std::string("levels/") + name + ".field";
        lv["residual"] = rec.residual;
        lv["steps"] = rec.steps;
        lv["converged"] = rec.converged;
        lv["energy_bound_ok"] = rec.energy_bound_ok;
        levels.push_back(lv);
    }

    const auto& c = archive.config;
    json manifest;
    manifest["code_version"] = code_version();
    manifest["config_hash"] = config_hash(c);
    manifest["forcing"] = forcing_name(c.forcing);
    manifest["force_k"] = {c.force_k1, c.force_k2};
    manifest["force_amplitude"] = c.force_amplitude;
    manifest["eval_resolution"] = c.eval_resolution;
    manifest["resolutions"] = c.resolutions;
    manifest["solver"] = {
        {"nu", c.solver.nu},
        {"dt", c.solver.dt},
        {"dealias", c.solver.dealias == DealiasRule::TwoThirds ? "two-thirds" : "none"},
        {"viscous", c.solver.viscous == ViscousTreatment::IntegratingFactor ? "integrating-factor" : "explicit"},
        {"eps_ss", c.solver.eps_steady},
        {"max_steps", c.solver.max_steps},
        {"nonlinear", c.solver.nonlinear == NonlinearMode::Projected ? "projected" : "raw"},
    };
    manifest["warm_start_gap"] = archive.warm_start_gap;
    manifest["levels"] = levels;
    std::ofstream os(dir / "manifest.json", std::ios::trunc);
    os << manifest.dump(2) << "\n";
    if (!os) throw MissingArtifactError("cannot write manifest in " + dir.string());
}

LadderArchive read_archive(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    const fs::path mpath = dir / "manifest.json";
    std::ifstream is(mpath);
    if (!is) throw MissingArtifactError("missing manifest: " + mpath.string());
    json manifest;
    is >> manifest;

    LadderConfig c;
    c.forcing = forcing_from_name(manifest.at("forcing").get<std::string>());
    c.force_k1 = manifest.at("force_k")[0].get<int>();
    c.force_k2 = manifest.at("force_k")[1].get<int>();
    c.force_amplitude = manifest.at("force_amplitude").get<double>();
    c.eval_resolution = manifest.at("eval_resolution").get<int>();
    c.resolutions = manifest.at("resolutions").get<std::vector<int>>();
    const json& s = manifest.at("solver");
    c.solver.nu = s.at("nu").get<double>();
    c.solver.dt = s.at("dt").get<double>();
    c.solver.dealias = s.at("dealias").get<std::string>() == "none" ? DealiasRule::None : DealiasRule::TwoThirds;
    c.solver.viscous = s.at("viscous").get<std::string>() == "explicit" ? ViscousTreatment::Explicit
                                                                        : ViscousTreatment::IntegratingFactor;
    c.solver.eps_steady = s.at("eps_ss").get<double>();
    c.solver.max_steps = s.at("max_steps").get<long>();
    c.solver.nonlinear = s.at("nonlinear").get<std::string>() == "raw" ? NonlinearMode::Raw
                                                                       : NonlinearMode::Projected;

    const WaveGrid eval = WaveGrid::square(c.eval_resolution);
    SpectralField w = read_field(dir / "reference" / "omega.field");
    SpectralField b = read_field(dir / "reference" / "btilde.field");
    SpectralField g = read_field(dir / "reference" / "forcing.field");
    if (w.grid() != eval) throw MissingArtifactError("reference omega grid does not match the manifest");

    LadderArchive archive(c, eval, std::move(w), std::move(b), std::move(g));
    for (const auto& lv : manifest.at("levels")) {
        SteadyStateRecord rec{WaveGrid::square(lv.at("n").get<int>()),
                              read_field(dir / lv.at("file").get<std::string>())};
        rec.residual = lv.at("residual").get<double>();
        rec.steps = lv.at("steps").get<long>();
        rec.converged = lv.at("converged").get<bool>();
        rec.energy_bound_ok = lv.at("energy_bound_ok").get<bool>();
        archive.records.push_back(std::move(rec));
    }
    if (manifest.contains("warm_start_gap"))
        archive.warm_start_gap = manifest.at("warm_start_gap").get<std::vector<double>>();
    return archive;
}

} // namespace galerkin
