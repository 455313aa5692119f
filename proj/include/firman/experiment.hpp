#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "firman/dynamics.hpp"
#include "firman/metrics.hpp"
#include "firman/sampling.hpp"

namespace firman {

// Comparison constants from Hofstra, Corten, van Tubergen & Ellison (2017),
// "Sources of segregation in social networks: A novel approach using
// Facebook", American Sociological Review 82(3): mean percentage of
// ethnically similar alters offline and on Facebook, and the published
// ratio of the two. Used only for the reference/delta columns of
// ratios.csv, never recomputed.
inline constexpr double kReferenceOfflineSimilarityPct = 76.218;
inline constexpr double kReferenceFacebookSimilarityPct = 75.974;
inline constexpr double kReferenceFacebookOfflineRatio = 0.997;

/// Invalid configuration (bad values, malformed JSON, unknown keys).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tie-capacity regime: population size and capacity mean.
struct ScenarioParams {
    std::string scenario_id;  // "offline" | "facebook"
    int n = 0;
    double tc_mean = 0.0;
};

/// Tie-outreachability regime.
struct CaseSpec {
    int case_id = 0;
    double q = 0.0;
};

struct ExperimentConfig {
    std::vector<CaseSpec> cases;
    std::vector<ScenarioParams> scenarios;
    double p = 0.0;
    double tc_variance = 0.0;
    std::vector<double> weights;
    int trials = 0;
    std::uint64_t base_seed = 0;
    std::string out_dir = "out";
    int workers = 0;  // 0 = hardware concurrency
    bool export_edges = false;

    /// Built-in defaults: 3 cases (q = .2/.5/.8) x 2 scenarios
    /// (offline n=30 mu=3, facebook n=300 mu=30), p = .22,
    /// variance = .25, unit weight, 100 trials per cell.
    static ExperimentConfig paper_preset();

    /// Loads a JSON config; file keys override the preset defaults.
    /// Throws ConfigError on parse errors, unknown keys, or bad values.
    static ExperimentConfig from_json_file(const std::string& path);

    /// Throws ConfigError naming every offending field.
    void validate() const;

    const CaseSpec& find_case(int case_id) const;
    const ScenarioParams& find_scenario(std::string_view scenario_id) const;

    PopulationSpec population_spec(const CaseSpec& cs, const ScenarioParams& sc) const;
};

/// Seed for one simulation: base_seed plus a stable hash of
/// (case, scenario, trial). FNV-1a over the scenario label chained
/// through splitmix64 with the two counters; stable across platforms.
std::uint64_t trial_seed(std::uint64_t base_seed, int case_id, std::string_view scenario_id,
                         int trial_index);

struct TrialResult {
    TrialRecord record;
    NetworkState state;
};

/// Samples one population and runs it to equilibrium under the given seed.
TrialResult run_trial(const ExperimentConfig& config, const CaseSpec& cs,
                      const ScenarioParams& sc, int trial_index, std::uint64_t seed);

/// One simulation by ids, with an explicit seed. When export_files is set,
/// writes agents_<tag>.csv and edges_<tag>.csv into config.out_dir with
/// tag = case<id>_<scenario>_seed<seed>.
TrialResult run_single(const ExperimentConfig& config, int case_id,
                       const std::string& scenario_id, std::uint64_t seed, bool export_files);

struct RatioRow {
    int case_id = 0;
    double q = 0.0;
    double facebook_mean = kNan;
    double offline_mean = kNan;
    double ratio = kNan;
    double reference = kReferenceFacebookOfflineRatio;
    double delta = kNan;  // ratio - reference
};

struct SweepResult {
    std::vector<TrialRecord> trials;          // (case, scenario, trial) order
    std::vector<ScenarioSummary> summaries;   // one per (case, scenario) cell
    std::vector<RatioRow> ratios;             // one per case, when both scenarios exist
};

struct SweepHooks {
    /// Invoked once per completed trial, possibly from worker threads
    /// concurrently; must be thread-safe.
    std::function<void(const TrialResult&)> on_trial;
};

/// Runs the full (case x scenario x trial) grid, writes trials.csv,
/// summary.csv and ratios.csv into config.out_dir (plus per-trial edge
/// lists when config.export_edges), and returns the in-memory results.
/// Output row order is deterministic regardless of worker count.
SweepResult run_sweep(const ExperimentConfig& config, const SweepHooks& hooks = {});

/// Writes id,si,to,tc,degree rows in id order.
void write_agents_csv(const NetworkState& state, const std::string& path);

/// Writes ego_id,alter_id,ego_si,alter_si rows with ego_id < alter_id,
/// sorted by (ego_id, alter_id).
void write_edges_csv(const NetworkState& state, const std::string& path);

/// Rebuilds a network from exported agents/edges files and audits it:
/// all NetworkState invariants, stored-vs-recomputed degrees, cross-file
/// si consistency, and the equilibrium oracle. Malformed files throw
/// IoError; semantic violations land in the report.
ValidationReport validate_files(const std::string& agents_path, const std::string& edges_path);

}  // namespace firman
