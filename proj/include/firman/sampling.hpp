#pragma once

#include <vector>

#include "firman/agent.hpp"
#include "firman/rng.hpp"

namespace firman {

/// Distribution parameters for generating one population:
/// Bernoulli(p) identity coordinates, Bernoulli(q) outreach, and a
/// discretized Normal(tc_mean, tc_variance) tie capacity.
struct PopulationSpec {
    int n = 0;
    double p = 0.0;
    double q = 0.0;
    double tc_mean = 0.0;
    double tc_variance = 0.0;
    IdentitySpace space = IdentitySpace::single();

    /// Throws std::invalid_argument naming every out-of-range field.
    void validate() const;
};

/// One identity coordinate: 1 with probability p, else 0.
int sample_si(const PopulationSpec& spec, Rng& rng);

/// Tie outreachability: 1 with probability q, else 0.
int sample_to(const PopulationSpec& spec, Rng& rng);

/// Tie capacity: Normal(tc_mean, sqrt(tc_variance)) rounded to the nearest
/// integer (halves away from zero), clamped to a minimum of 1.
int sample_tc(const PopulationSpec& spec, Rng& rng);

/// n agents with ids 0..n-1. Per agent, draws run in a fixed order (each
/// si coordinate in dimension order, then to, then tc) so a seed fully
/// determines the population.
std::vector<Agent> sample_population(const PopulationSpec& spec, Rng& rng);

}  // namespace firman
