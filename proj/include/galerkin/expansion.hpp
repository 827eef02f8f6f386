#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galerkin/sobolev_scale.hpp"
#include "galerkin/spectral_field.hpp"

namespace galerkin {

enum class LimitMode { Analytic, Finest, Extrapolated };

struct ExpansionOptions {
    LimitMode limit_mode = LimitMode::Finest;
    int max_terms = 3;
    double theta_degenerate = 0.1;   // trailing Z_k norm below this + decreasing => w_k = 0
    double degenerate_slope = 0.05;  // required downward log-log trend
    double gamma_floor_rel = 1e-12;  // coefficients below floor*scale are treated as exact zeros
    int window = 3;                  // trailing elements averaged for limit vectors
    double quotient_growth_tol = 1.5; // stop peeling when trailing quotients grow past this factor
};

enum class ExpansionClass { Trivial, FiniteK, TruncatedAtKmax };

struct ConditionEntry {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string note;
};

/// One extracted term: coefficients Gamma_{k,n} (NaN where the remainder sits
/// at the floor), the limit vector (flat coefficients; empty when degenerate),
/// and the measured remainder traces.
struct TermRecord {
    std::vector<double> gamma;
    std::vector<double> remainder_norm_next; // ||w_{k,n}||_{Z_k}
    std::vector<double> remainder_dist;      // ||w_{k,n} - w_k||_{Z_k}
    std::vector<double> w;                   // estimated limit vector, zero vector if degenerate
    bool degenerate = false;
    int valid_count = 0;
};

struct ExpansionReport {
    std::vector<double> limit;
    std::vector<std::size_t> peeled_indices; // indices of the sequence actually peeled
    std::vector<TermRecord> terms;
    ExpansionClass classification = ExpansionClass::Trivial;
    std::vector<ConditionEntry> conditions;
    double reconstruction_error = 0.0;
    int limit_window = 0;
};

/// Nested norm family Z_0, Z_1, ...; weaker norms at larger k.
struct NormFamily {
    std::vector<std::function<double(const std::vector<double>&)>> norms;
    std::size_t size() const { return norms.size(); }
};

/// Flat-coefficient sequence with optional lambda_cut labels per element.
struct FlatSequence {
    std::vector<std::vector<double>> elements;
    std::vector<double> lambda_labels; // empty, or one per element
};

/// Peel a strict expansion from a convergent sequence: Gamma_{k,n} =
/// ||r_{k,n}||_{Z_{k-1}}, w_{k,n} = r_{k,n}/Gamma_{k,n}, the limit vector
/// estimated as a trailing-window average and zeroed when the Z_k trace
/// flags the term degenerate.
ExpansionReport extract_flat(const FlatSequence& seq, const NormFamily& family,
                             const ExpansionOptions& options,
                             const std::vector<double>* analytic_limit = nullptr);

/// Re-check the defining conditions against the sequence: coefficients
/// decreasing to zero, quotients decreasing, remainders converging, and the
/// exact reconstruction identity.  Pure check; appends pass/fail entries.
std::vector<ConditionEntry> verify_report_flat(const ExpansionReport& report, const FlatSequence& seq,
                                               const NormFamily& family, double recon_tol = 1e-12);

// --- SpectralField front end ---------------------------------------------

std::vector<double> flatten(const SpectralField& f);
SpectralField unflatten(const WaveGrid& grid, const std::vector<double>& flat);

/// D(A^{s_k}) norms over flattened fields.
NormFamily sobolev_family(const WaveGrid& grid, const SobolevScale& scale);

struct FieldExpansion {
    WaveGrid grid;
    SobolevScale scale;
    ExpansionReport report;

    SpectralField limit_field() const { return unflatten(grid, report.limit); }
    SpectralField term_field(std::size_t k) const { return unflatten(grid, report.terms[k].w); }
};

/// Sequence of fields (common grid) in the D(A^{s_k}) hierarchy.
FieldExpansion extract(const std::vector<SpectralField>& sequence, const SobolevScale& scale,
                       const ExpansionOptions& options,
                       const SpectralField* analytic_limit = nullptr,
                       const std::vector<double>* lambda_labels = nullptr);

std::vector<ConditionEntry> verify_report(const FieldExpansion& fx,
                                          const std::vector<SpectralField>& sequence,
                                          double recon_tol = 1e-12);

// --- Tail-norm oracle ------------------------------------------------------

/// Closed-form degenerate coefficients for the projection sequence P_n g:
/// Gamma~_{k,n} = ||Q_n g||_{D(A^{s_{k-1}})} by direct summation over the
/// excluded lattice, with the quotient bounds lambda_cut^{s_k - s_{k-1}}.
struct Example3Table {
    std::vector<double> lambda_cut;                 // per cutoff
    std::vector<std::vector<double>> gamma_tilde;   // [k][n]
    std::vector<std::vector<double>> quotient;      // [k][n], Gamma~_{k+1}/Gamma~_k
    std::vector<std::vector<double>> bound;         // lambda_cut^{s_k - s_{k-1}}
    std::vector<bool> hypothesis_violated;          // Q_n g == 0 at this cutoff
};

Example3Table example3_oracle(const SpectralField& g, const SobolevScale& scale,
                              const std::vector<WaveGrid>& cutoffs);

} // namespace galerkin
