#include <cmath>

#include <doctest.h>

#include "firman/dynamics.hpp"
#include "firman/metrics.hpp"
#include "firman/sampling.hpp"
#include "fixtures.hpp"

using namespace firman;

TEST_CASE("dyad counts partition the edge set") {
    const IdentitySpace space = IdentitySpace::single();

    SUBCASE("worked example: five homogeneous dyads, one heterogeneous") {
        const NetworkState state = fixtures::six_agent_network(space);
        const DyadCounts counts = dyad_counts(state, space);
        CHECK(counts.homo == 5);   // A-C, A-D, B-D, C-D, E-F
        CHECK(counts.hetero == 1); // B-E
        CHECK(counts.total() == static_cast<long>(state.edges().size()));
    }
    SUBCASE("empty edge set") {
        NetworkState state{{Agent{0, {0}, 0, 1}, Agent{1, {1}, 0, 1}}};
        const DyadCounts counts = dyad_counts(state, space);
        CHECK(counts.homo == 0);
        CHECK(counts.hetero == 0);
    }
    SUBCASE("single-group population has no heterogeneous dyads") {
        std::vector<Agent> agents;
        for (AgentId id = 0; id < 6; ++id) agents.push_back(Agent{id, {0}, 1, 6});
        Rng rng(3);
        const NetworkState state = run_to_equilibrium(std::move(agents), space, rng);
        CHECK(dyad_counts(state, space).hetero == 0);
        CHECK(dyad_counts(state, space).homo == 15);
    }
}

TEST_CASE("ego-alter similarity") {
    const IdentitySpace space = IdentitySpace::single();

    SUBCASE("three same-group alters and one cross-group alter give 75%") {
        NetworkState state{{Agent{0, {0}, 1, 4}, Agent{1, {0}, 0, 1}, Agent{2, {0}, 0, 1},
                            Agent{3, {0}, 0, 1}, Agent{4, {1}, 1, 1}}};
        for (AgentId alter = 1; alter <= 4; ++alter) state.add_edge(0, alter, space);
        const SimilarityStats stats = ego_alter_similarity(state, space);
        CHECK(stats.per_ego.front() == std::pair<AgentId, double>{0, 75.0});
    }
    SUBCASE("worked example means") {
        const NetworkState state = fixtures::six_agent_network(space);
        const SimilarityStats stats = ego_alter_similarity(state, space);
        // Per ego: A 100, B 50, C 100, D 100, E 50, F 100.
        CHECK(stats.per_ego.size() == 6);
        CHECK(stats.mean == doctest::Approx(500.0 / 6.0));
        CHECK(stats.mean_majority == doctest::Approx(87.5));
        CHECK(stats.mean_minority == doctest::Approx(75.0));
        CHECK(stats.n_isolates == 0);
    }
    SUBCASE("isolates are excluded and counted") {
        NetworkState state{{Agent{0, {0}, 0, 2}, Agent{1, {0}, 0, 2}, Agent{2, {1}, 0, 2}}};
        state.add_edge(0, 1, space);
        const SimilarityStats stats = ego_alter_similarity(state, space);
        CHECK(stats.per_ego.size() == 2);
        CHECK(stats.mean == 100.0);
        CHECK(stats.n_isolates == 1);
        CHECK(std::isnan(stats.mean_minority));  // the only minority agent is isolated
    }
}

TEST_CASE("satisfaction threshold is exactly half of capacity") {
    const IdentitySpace space = IdentitySpace::single();

    // One focal agent with varying capacity; partners (tc = 1, one friend
    // each) are always satisfied, so the focal agent decides the gap.
    auto population_pct = [&space](int capacity, int friends) {
        std::vector<Agent> agents;
        agents.push_back(Agent{0, {0}, 0, capacity});
        for (AgentId id = 1; id <= friends; ++id) agents.push_back(Agent{id, {0}, 0, 1});
        NetworkState state{std::move(agents)};
        for (AgentId id = 1; id <= friends; ++id) state.add_edge(0, id, space);
        return satisfaction_pct(state);
    };
    CHECK(population_pct(3, 1) == doctest::Approx(50.0));   // 2 * 1 < 3: focal unsatisfied
    CHECK(population_pct(3, 2) == doctest::Approx(100.0));  // 2 * 2 >= 3
    CHECK(population_pct(4, 2) == doctest::Approx(100.0));  // exactly half counts
    SUBCASE("worked example: only F falls short") {
        const NetworkState state = fixtures::six_agent_network(space);
        CHECK(satisfaction_pct(state) == doctest::Approx(100.0 * 5.0 / 6.0));
    }
}

TEST_CASE("satisfaction never drops as edges form") {
    const IdentitySpace space = IdentitySpace::single();
    PopulationSpec spec;
    spec.n = 12;
    spec.p = 0.3;
    spec.q = 0.6;
    spec.tc_mean = 3.0;
    spec.tc_variance = 1.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        NetworkState state{sample_population(spec, rng)};
        std::vector<bool> satisfied(static_cast<std::size_t>(state.size()), false);
        auto refresh = [&]() {
            for (const Agent& a : state.agents()) {
                const bool now = 2 * state.degree(a.id) >= a.capacity;
                if (satisfied[static_cast<std::size_t>(a.id)]) CHECK(now);
                satisfied[static_cast<std::size_t>(a.id)] = now;
            }
        };
        refresh();
        while (step(state, space, rng)) refresh();
    }
}

TEST_CASE("facebook-offline ratio") {
    CHECK(fb_offline_ratio(75.981, 77.799) == doctest::Approx(0.977).epsilon(0.001));
    CHECK(fb_offline_ratio(89.044, 89.628) == doctest::Approx(0.993).epsilon(0.001));
    CHECK(fb_offline_ratio(83.2, 83.2) == 1.0);
    CHECK_THROWS_AS(fb_offline_ratio(50.0, 0.0), std::invalid_argument);
}

TEST_CASE("trial records and summaries") {
    const IdentitySpace space = IdentitySpace::single();

    SUBCASE("record of the worked example") {
        const NetworkState state = fixtures::six_agent_network(space);
        const TrialRecord rec = make_trial_record(state, space, 1, "offline", 0, 42);
        CHECK(rec.n_agents == 6);
        CHECK(rec.n_minority == 2);
        CHECK(rec.homo_dyads == 5);
        CHECK(rec.hetero_dyads == 1);
        CHECK(rec.total_dyads() == 6);
        CHECK(rec.hetero_pct() == doctest::Approx(100.0 / 6.0));
        CHECK(rec.mean_ego_alter_similarity == doctest::Approx(500.0 / 6.0));
        CHECK(rec.pct_satisfied == doctest::Approx(100.0 * 5.0 / 6.0));
        CHECK(rec.minority_share_pct() == doctest::Approx(100.0 / 3.0));
        CHECK(rec.n_isolates == 0);
    }
    SUBCASE("single trial summarizes to mean = value, sd = 0") {
        TrialRecord rec;
        rec.case_id = 2;
        rec.scenario_id = "facebook";
        rec.homo_dyads = 40;
        rec.hetero_dyads = 10;
        rec.mean_ego_alter_similarity = 80.0;
        rec.pct_satisfied = 100.0;
        rec.n_agents = 300;
        const ScenarioSummary s = summarize({rec});
        CHECK(s.n_trials == 1);
        CHECK(s.similarity.mean == 80.0);
        CHECK(s.similarity.sd == 0.0);
        CHECK(s.hetero_pct_pooled == doctest::Approx(20.0));
    }
    SUBCASE("pooled hetero share weights trials by dyads") {
        TrialRecord small;
        small.case_id = 1;
        small.scenario_id = "offline";
        small.homo_dyads = 9;
        small.hetero_dyads = 1;  // 10%
        TrialRecord big = small;
        big.trial_index = 1;
        big.homo_dyads = 60;
        big.hetero_dyads = 30;  // 33.3%
        const ScenarioSummary s = summarize({small, big});
        CHECK(s.hetero_pct_pooled == doctest::Approx(100.0 * 31.0 / 100.0));
        CHECK(s.hetero_pct.mean == doctest::Approx((10.0 + 100.0 / 3.0) / 2.0));
    }
    SUBCASE("mixed cells are rejected") {
        TrialRecord a, b;
        a.case_id = 1;
        a.scenario_id = "offline";
        b.case_id = 2;
        b.scenario_id = "offline";
        CHECK_THROWS_AS(summarize({a, b}), std::invalid_argument);
        CHECK_THROWS_AS(summarize({}), std::invalid_argument);
    }
}

TEST_CASE("mean_sd skips undefined entries") {
    const MeanSd all = mean_sd({1.0, 2.0, 3.0});
    CHECK(all.mean == doctest::Approx(2.0));
    CHECK(all.sd == doctest::Approx(1.0));
    CHECK(all.n == 3);
    const MeanSd mixed = mean_sd({1.0, kNan, 3.0});
    CHECK(mixed.mean == doctest::Approx(2.0));
    CHECK(mixed.n == 2);
    const MeanSd none = mean_sd({kNan});
    CHECK(none.n == 0);
    CHECK(std::isnan(none.mean));
}
