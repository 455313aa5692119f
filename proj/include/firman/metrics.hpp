#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "firman/network.hpp"

namespace firman {

inline constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct DyadCounts {
    long homo = 0;    // edges with identity distance 0
    long hetero = 0;  // edges with identity distance > 0
    long total() const { return homo + hetero; }
};

/// Partitions the edge set into homogeneous and heterogeneous dyads.
DyadCounts dyad_counts(const NetworkState& state, const IdentitySpace& space);

/// Ego-alter similarity: for each ego with at least one friend, the
/// percentage of its alters at identity distance zero. Isolates are
/// excluded from every mean and counted separately. The majority/minority
/// split keys on the first identity dimension (0 = majority). Means are
/// NaN when no ego qualifies.
struct SimilarityStats {
    std::vector<std::pair<AgentId, double>> per_ego;  // egos with degree >= 1
    double mean = kNan;
    double mean_majority = kNan;
    double mean_minority = kNan;
    int n_isolates = 0;
};

SimilarityStats ego_alter_similarity(const NetworkState& state, const IdentitySpace& space);

/// Percentage of agents holding at least half their tie capacity,
/// decided by the exact integer test 2 * num_f >= tc.
double satisfaction_pct(const NetworkState& state);

/// Facebook-to-offline ratio of mean ego-alter similarity percentages.
/// Throws std::invalid_argument unless offline_mean_pct > 0.
double fb_offline_ratio(double facebook_mean_pct, double offline_mean_pct);

/// Per-simulation metrics row.
struct TrialRecord {
    int case_id = 0;
    std::string scenario_id;
    int trial_index = 0;
    std::uint64_t seed = 0;
    int n_agents = 0;
    int n_minority = 0;
    long homo_dyads = 0;
    long hetero_dyads = 0;
    double mean_ego_alter_similarity = kNan;
    double mean_similarity_majority = kNan;
    double mean_similarity_minority = kNan;
    double pct_satisfied = kNan;
    int n_isolates = 0;

    long total_dyads() const { return homo_dyads + hetero_dyads; }
    double hetero_pct() const {
        return total_dyads() > 0 ? 100.0 * static_cast<double>(hetero_dyads) / static_cast<double>(total_dyads()) : kNan;
    }
    double minority_share_pct() const {
        return n_agents > 0 ? 100.0 * n_minority / n_agents : kNan;
    }
};

/// Computes every TrialRecord metric from a terminal state.
TrialRecord make_trial_record(const NetworkState& state, const IdentitySpace& space, int case_id,
                              const std::string& scenario_id, int trial_index, std::uint64_t seed);

/// Mean and sample standard deviation (n-1 denominator; 0 for a single
/// value) over the defined (non-NaN) entries of a metric.
struct MeanSd {
    double mean = kNan;
    double sd = kNan;
    int n = 0;
};

MeanSd mean_sd(const std::vector<double>& values);

/// Cross-trial aggregates for one (case, scenario) cell.
struct ScenarioSummary {
    int case_id = 0;
    std::string scenario_id;
    int n_trials = 0;
    MeanSd total_dyads;
    MeanSd homo_dyads;
    MeanSd hetero_dyads;
    double hetero_pct_pooled = kNan;  // 100 * sum(hetero) / sum(total) across trials
    MeanSd hetero_pct;                // mean over per-trial percentages
    MeanSd similarity;
    MeanSd similarity_majority;
    MeanSd similarity_minority;
    MeanSd pct_satisfied;
    MeanSd minority_share_pct;
    MeanSd n_isolates;
};

/// Aggregates trials of a single (case, scenario) cell. Throws
/// std::invalid_argument when the list is empty or mixes cells.
ScenarioSummary summarize(const std::vector<TrialRecord>& trials);

}  // namespace firman
