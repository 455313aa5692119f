#include "firman/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace firman {

DyadCounts dyad_counts(const NetworkState& state, const IdentitySpace& space) {
    DyadCounts counts;
    for (const Edge& e : state.edges()) {
        if (identity_distance(state.agent(e.first), state.agent(e.second), space) == 0.0)
            counts.homo += 1;
        else
            counts.hetero += 1;
    }
    return counts;
}

SimilarityStats ego_alter_similarity(const NetworkState& state, const IdentitySpace& space) {
    SimilarityStats stats;
    double sum = 0.0, sum_majority = 0.0, sum_minority = 0.0;
    int n = 0, n_majority = 0, n_minority = 0;
    for (const Agent& ego : state.agents()) {
        const auto& alters = state.neighbors(ego.id);
        if (alters.empty()) {
            stats.n_isolates += 1;
            continue;
        }
        int same = 0;
        for (AgentId alter : alters)
            if (identity_distance(ego, state.agent(alter), space) == 0.0) same += 1;
        const double pct = 100.0 * same / static_cast<double>(alters.size());
        stats.per_ego.emplace_back(ego.id, pct);
        sum += pct;
        n += 1;
        if (ego.si.at(0) == 0) {
            sum_majority += pct;
            n_majority += 1;
        } else {
            sum_minority += pct;
            n_minority += 1;
        }
    }
    if (n > 0) stats.mean = sum / n;
    if (n_majority > 0) stats.mean_majority = sum_majority / n_majority;
    if (n_minority > 0) stats.mean_minority = sum_minority / n_minority;
    return stats;
}

double satisfaction_pct(const NetworkState& state) {
    if (state.size() == 0) return kNan;
    int satisfied = 0;
    for (const Agent& a : state.agents())
        if (2 * state.degree(a.id) >= a.capacity) satisfied += 1;
    return 100.0 * satisfied / static_cast<double>(state.size());
}

double fb_offline_ratio(double facebook_mean_pct, double offline_mean_pct) {
    if (!(offline_mean_pct > 0.0))
        throw std::invalid_argument("fb_offline_ratio: offline mean must be > 0");
    return facebook_mean_pct / offline_mean_pct;
}

TrialRecord make_trial_record(const NetworkState& state, const IdentitySpace& space, int case_id,
                              const std::string& scenario_id, int trial_index,
                              std::uint64_t seed) {
    TrialRecord rec;
    rec.case_id = case_id;
    rec.scenario_id = scenario_id;
    rec.trial_index = trial_index;
    rec.seed = seed;
    rec.n_agents = state.size();
    for (const Agent& a : state.agents())
        if (a.si.at(0) != 0) rec.n_minority += 1;
    const DyadCounts counts = dyad_counts(state, space);
    rec.homo_dyads = counts.homo;
    rec.hetero_dyads = counts.hetero;
    const SimilarityStats sim = ego_alter_similarity(state, space);
    rec.mean_ego_alter_similarity = sim.mean;
    rec.mean_similarity_majority = sim.mean_majority;
    rec.mean_similarity_minority = sim.mean_minority;
    rec.n_isolates = sim.n_isolates;
    rec.pct_satisfied = satisfaction_pct(state);
    return rec;
}

MeanSd mean_sd(const std::vector<double>& values) {
    MeanSd out;
    double sum = 0.0;
    for (double v : values) {
        if (std::isnan(v)) continue;
        sum += v;
        out.n += 1;
    }
    if (out.n == 0) return out;
    out.mean = sum / out.n;
    if (out.n == 1) {
        out.sd = 0.0;
        return out;
    }
    double ss = 0.0;
    for (double v : values) {
        if (std::isnan(v)) continue;
        ss += (v - out.mean) * (v - out.mean);
    }
    out.sd = std::sqrt(ss / (out.n - 1));
    return out;
}

ScenarioSummary summarize(const std::vector<TrialRecord>& trials) {
    if (trials.empty()) throw std::invalid_argument("summarize: no trials");
    ScenarioSummary s;
    s.case_id = trials.front().case_id;
    s.scenario_id = trials.front().scenario_id;
    s.n_trials = static_cast<int>(trials.size());
    for (const TrialRecord& t : trials)
        if (t.case_id != s.case_id || t.scenario_id != s.scenario_id)
            throw std::invalid_argument("summarize: mixed case/scenario ids (" +
                                        std::to_string(t.case_id) + "/" + t.scenario_id +
                                        " vs " + std::to_string(s.case_id) + "/" + s.scenario_id +
                                        ")");

    auto collect = [&trials](auto&& get) {
        std::vector<double> v;
        v.reserve(trials.size());
        for (const TrialRecord& t : trials) v.push_back(get(t));
        return v;
    };
    s.total_dyads = mean_sd(collect([](const TrialRecord& t) { return static_cast<double>(t.total_dyads()); }));
    s.homo_dyads = mean_sd(collect([](const TrialRecord& t) { return static_cast<double>(t.homo_dyads); }));
    s.hetero_dyads = mean_sd(collect([](const TrialRecord& t) { return static_cast<double>(t.hetero_dyads); }));
    s.hetero_pct = mean_sd(collect([](const TrialRecord& t) { return t.hetero_pct(); }));
    s.similarity = mean_sd(collect([](const TrialRecord& t) { return t.mean_ego_alter_similarity; }));
    s.similarity_majority = mean_sd(collect([](const TrialRecord& t) { return t.mean_similarity_majority; }));
    s.similarity_minority = mean_sd(collect([](const TrialRecord& t) { return t.mean_similarity_minority; }));
    s.pct_satisfied = mean_sd(collect([](const TrialRecord& t) { return t.pct_satisfied; }));
    s.minority_share_pct = mean_sd(collect([](const TrialRecord& t) { return t.minority_share_pct(); }));
    s.n_isolates = mean_sd(collect([](const TrialRecord& t) { return static_cast<double>(t.n_isolates); }));

    long hetero_sum = 0, total_sum = 0;
    for (const TrialRecord& t : trials) {
        hetero_sum += t.hetero_dyads;
        total_sum += t.total_dyads();
    }
    if (total_sum > 0)
        s.hetero_pct_pooled = 100.0 * static_cast<double>(hetero_sum) / static_cast<double>(total_sum);
    return s;
}

}  // namespace firman
