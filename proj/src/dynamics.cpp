#include "firman/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace firman {

namespace {

bool capped(const NetworkState& state, AgentId id) {
    return state.degree(id) >= state.agent(id).capacity;
}

/// Candidate pairs that could still form. Distance compatibility never
/// changes, so pairs are filtered once up front; capacity exhaustion and
/// formed edges are discovered lazily and stale entries removed for good.
class PairPool {
public:
    PairPool(const NetworkState& state, const IdentitySpace& space) {
        const AgentId n = static_cast<AgentId>(state.size());
        for (AgentId x = 0; x < n; ++x)
            for (AgentId y = x + 1; y < n; ++y)
                if (eligible(state, x, y, space)) pairs_.emplace_back(x, y);
    }

    /// Uniform draw over the live pairs; removes the drawn pair. A pair
    /// never becomes eligible again after going stale, so rejecting stale
    /// entries keeps the draw uniform over the live set.
    std::optional<Edge> draw(const NetworkState& state, Rng& rng) {
        while (!pairs_.empty()) {
            const std::size_t i = static_cast<std::size_t>(rng.below(pairs_.size()));
            const Edge e = pairs_[i];
            pairs_[i] = pairs_.back();
            pairs_.pop_back();
            if (live(state, e)) return e;
        }
        return std::nullopt;
    }

private:
    static bool live(const NetworkState& state, const Edge& e) {
        return !state.has_edge(e.first, e.second) && !capped(state, e.first) &&
               !capped(state, e.second);
    }

    std::vector<Edge> pairs_;
};

void shuffle_ids(std::vector<AgentId>& ids, Rng& rng) {
    for (std::size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[static_cast<std::size_t>(rng.below(i))]);
}

NetworkState run_random_eligible_pair(NetworkState state, const IdentitySpace& space, Rng& rng) {
    PairPool pool(state, space);
    while (auto e = pool.draw(state, rng)) state.add_edge(e->first, e->second, space);
    return state;
}

NetworkState run_initiator_rotation(NetworkState state, const IdentitySpace& space, Rng& rng) {
    const AgentId n = static_cast<AgentId>(state.size());
    std::vector<AgentId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<AgentId> partners;
    // A round with zero formations leaves eligibility untouched, so every
    // initiator saw an empty partner set and the network is at equilibrium.
    for (long formed = -1; formed != 0;) {
        formed = 0;
        shuffle_ids(order, rng);
        for (AgentId x : order) {
            if (capped(state, x)) continue;
            partners.clear();
            for (AgentId y = 0; y < n; ++y)
                if (y != x && eligible(state, x, y, space)) partners.push_back(y);
            if (partners.empty()) continue;
            const AgentId y = partners[static_cast<std::size_t>(rng.below(partners.size()))];
            state.add_edge(x, y, space);
            ++formed;
        }
    }
    return state;
}

}  // namespace

std::optional<Edge> step(NetworkState& state, const IdentitySpace& space, Rng& rng) {
    std::vector<Edge> open;
    const AgentId n = static_cast<AgentId>(state.size());
    for (AgentId x = 0; x < n; ++x)
        for (AgentId y = x + 1; y < n; ++y)
            if (eligible(state, x, y, space)) open.emplace_back(x, y);
    if (open.empty()) return std::nullopt;
    const Edge e = open[static_cast<std::size_t>(rng.below(open.size()))];
    state.add_edge(e.first, e.second, space);
    return e;
}

NetworkState run_to_equilibrium(std::vector<Agent> population, const IdentitySpace& space,
                                Rng& rng, SchedulerPolicy policy) {
    NetworkState state(std::move(population));
    switch (policy) {
        case SchedulerPolicy::RandomEligiblePair:
            return run_random_eligible_pair(std::move(state), space, rng);
        case SchedulerPolicy::InitiatorRotation:
            return run_initiator_rotation(std::move(state), space, rng);
    }
    throw std::invalid_argument("run_to_equilibrium: unknown scheduler policy");
}

}  // namespace firman
