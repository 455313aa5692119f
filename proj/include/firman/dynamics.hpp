#pragma once

#include <optional>

#include "firman/network.hpp"
#include "firman/rng.hpp"

namespace firman {

/// Activation regime for friendship formation. Both schedulers only ever
/// form eligible pairs and terminate at equilibrium; they differ in who
/// gets the next formation opportunity.
///
/// InitiatorRotation: repeated rounds; each round shuffles the agents and
/// every agent below capacity invites one uniformly random partner it can
/// still befriend (reachable, both below capacity), who accepts. Every
/// agent gets the same activation rate, so slow corners of the network
/// keep filling while partners remain.
///
/// RandomEligiblePair: one pair drawn uniformly at random from the
/// currently eligible pair set per step. Well-connected agents fill
/// faster; sparsely connectable agents can end further below capacity.
enum class SchedulerPolicy { InitiatorRotation, RandomEligiblePair };

/// One activation: if any eligible pair exists, picks one uniformly at
/// random (full scan of the current eligible set), forms it, and returns
/// it. Returns nothing once the network is at equilibrium.
std::optional<Edge> step(NetworkState& state, const IdentitySpace& space, Rng& rng);

/// Runs stochastic friendship formation until no pair satisfies the
/// formation rule. Every edge is added only while eligible, so the result
/// passes is_equilibrium() and all NetworkState invariants. Edge count is
/// bounded by sum(tc)/2.
NetworkState run_to_equilibrium(std::vector<Agent> population, const IdentitySpace& space,
                                Rng& rng,
                                SchedulerPolicy policy = SchedulerPolicy::InitiatorRotation);

}  // namespace firman
