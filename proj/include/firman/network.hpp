#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "firman/agent.hpp"

namespace firman {

/// Unordered friendship edge, stored with first < second.
using Edge = std::pair<AgentId, AgentId>;

/// Undirected friendship network over a fixed population.
///
/// Agents are indexed by dense ids 0..n-1. Edges form a set of distinct
/// unordered pairs; per-agent degree (num_f) and adjacency are maintained
/// incrementally and can be reconciled against the edge list by
/// validate_network().
class NetworkState {
public:
    explicit NetworkState(std::vector<Agent> agents);

    int size() const { return static_cast<int>(agents_.size()); }
    const std::vector<Agent>& agents() const { return agents_; }
    const Agent& agent(AgentId id) const { return agents_.at(static_cast<std::size_t>(id)); }

    const std::vector<Edge>& edges() const { return edges_; }
    int degree(AgentId id) const { return degree_.at(static_cast<std::size_t>(id)); }
    const std::vector<AgentId>& neighbors(AgentId id) const {
        return adjacency_.at(static_cast<std::size_t>(id));
    }
    bool has_edge(AgentId x, AgentId y) const;

    /// Formation-checked insertion. Throws std::logic_error when the pair
    /// is not eligible; the scheduler must gate every call on eligible().
    void add_edge(AgentId x, AgentId y, const IdentitySpace& space);

    /// Inserts without any formation check. For loading states from files
    /// and for negative tests; validate_network() reports the damage.
    void add_edge_unchecked(AgentId x, AgentId y);

private:
    std::vector<Agent> agents_;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<AgentId>> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Friendship formation predicate: true iff (x, y) is not already an edge,
/// the identity distance is within both agents' outreach, and both agents
/// are strictly below capacity. Throws std::invalid_argument for x == y.
bool eligible(const NetworkState& state, AgentId x, AgentId y, const IdentitySpace& space);

/// Exhaustive O(n^2) scan over all unordered pairs; true iff no pair is
/// eligible. This is the oracle the dynamics scheduler must satisfy.
bool is_equilibrium(const NetworkState& state, const IdentitySpace& space);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Full invariant audit: self-loops, duplicate edges, capacity, outreach,
/// degree/edge reconciliation, and (optionally) the equilibrium scan.
/// Violations name the failed invariant and the offending agent ids.
ValidationReport validate_network(const NetworkState& state, const IdentitySpace& space,
                                  bool require_equilibrium = true);

}  // namespace firman
