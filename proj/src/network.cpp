#include "firman/network.hpp"

#include <algorithm>
#include <cstdint>

namespace firman {

namespace {

std::uint64_t edge_key(AgentId x, AgentId y) {
    const auto lo = static_cast<std::uint32_t>(std::min(x, y));
    const auto hi = static_cast<std::uint32_t>(std::max(x, y));
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

}  // namespace

NetworkState::NetworkState(std::vector<Agent> agents) : agents_(std::move(agents)) {
    for (std::size_t i = 0; i < agents_.size(); ++i)
        if (agents_[i].id != static_cast<AgentId>(i))
            throw std::invalid_argument("NetworkState: agent ids must be dense 0..n-1, got id " +
                                        std::to_string(agents_[i].id) + " at index " +
                                        std::to_string(i));
    degree_.assign(agents_.size(), 0);
    adjacency_.assign(agents_.size(), {});
}

bool NetworkState::has_edge(AgentId x, AgentId y) const {
    return edge_keys_.count(edge_key(x, y)) > 0;
}

void NetworkState::add_edge(AgentId x, AgentId y, const IdentitySpace& space) {
    if (!eligible(*this, x, y, space))
        throw std::logic_error("add_edge: pair (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") is not eligible");
    add_edge_unchecked(x, y);
}

void NetworkState::add_edge_unchecked(AgentId x, AgentId y) {
    // Bounds-checked so corrupt inputs fail loudly instead of scribbling.
    degree_.at(static_cast<std::size_t>(x));
    degree_.at(static_cast<std::size_t>(y));
    edges_.emplace_back(std::min(x, y), std::max(x, y));
    edge_keys_.insert(edge_key(x, y));
    degree_[static_cast<std::size_t>(x)] += 1;
    degree_[static_cast<std::size_t>(y)] += 1;
    adjacency_[static_cast<std::size_t>(x)].push_back(y);
    adjacency_[static_cast<std::size_t>(y)].push_back(x);
}

bool eligible(const NetworkState& state, AgentId x, AgentId y, const IdentitySpace& space) {
    if (x == y)
        throw std::invalid_argument("eligible: x and y must be distinct, got id " +
                                    std::to_string(x) + " twice");
    const Agent& ax = state.agent(x);
    const Agent& ay = state.agent(y);
    if (state.has_edge(x, y)) return false;
    if (state.degree(x) >= ax.capacity || state.degree(y) >= ay.capacity) return false;
    return identity_distance(ax, ay, space) <= static_cast<double>(std::min(ax.outreach, ay.outreach));
}

bool is_equilibrium(const NetworkState& state, const IdentitySpace& space) {
    const AgentId n = static_cast<AgentId>(state.size());
    for (AgentId x = 0; x < n; ++x)
        for (AgentId y = x + 1; y < n; ++y)
            if (eligible(state, x, y, space)) return false;
    return true;
}

ValidationReport validate_network(const NetworkState& state, const IdentitySpace& space,
                                  bool require_equilibrium) {
    ValidationReport report;
    auto fail = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const int n = state.size();
    for (const Agent& a : state.agents()) {
        if (static_cast<int>(a.si.size()) != space.dims())
            fail("identity dimensions: agent " + std::to_string(a.id) + " has " +
                 std::to_string(a.si.size()) + " coordinates, space has " +
                 std::to_string(space.dims()));
        if (a.outreach < 0)
            fail("outreachability: agent " + std::to_string(a.id) + " has to < 0");
        if (a.capacity < 0)
            fail("capacity: agent " + std::to_string(a.id) + " has tc < 0");
    }
    if (!report.ok) return report;  // structural damage; later checks would misfire

    std::vector<int> recount(static_cast<std::size_t>(n), 0);
    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : state.edges()) {
        const auto [x, y] = e;
        if (x < 0 || x >= n || y < 0 || y >= n) {
            fail("edge endpoints: (" + std::to_string(x) + ", " + std::to_string(y) +
                 ") reference unknown agents");
            continue;
        }
        if (x == y) {
            fail("self-loop: agent " + std::to_string(x));
            continue;
        }
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(std::min(x, y))) << 32) |
            static_cast<std::uint32_t>(std::max(x, y));
        if (!seen.insert(key).second)
            fail("duplicate edge: (" + std::to_string(x) + ", " + std::to_string(y) + ")");
        recount[static_cast<std::size_t>(x)] += 1;
        recount[static_cast<std::size_t>(y)] += 1;

        const Agent& ax = state.agent(x);
        const Agent& ay = state.agent(y);
        const double dist = identity_distance(ax, ay, space);
        if (dist > static_cast<double>(std::min(ax.outreach, ay.outreach)))
            fail("outreach: edge (" + std::to_string(x) + ", " + std::to_string(y) + ") spans " +
                 std::to_string(dist) + " > min(to) = " +
                 std::to_string(std::min(ax.outreach, ay.outreach)));
    }

    for (AgentId id = 0; id < n; ++id) {
        const auto idx = static_cast<std::size_t>(id);
        if (recount[idx] != state.degree(id))
            fail("degree reconciliation: agent " + std::to_string(id) + " tracks " +
                 std::to_string(state.degree(id)) + ", edge list gives " +
                 std::to_string(recount[idx]));
        if (recount[idx] > state.agent(id).capacity)
            fail("capacity: agent " + std::to_string(id) + " holds " + std::to_string(recount[idx]) +
                 " ties, tc = " + std::to_string(state.agent(id).capacity));
    }

    if (require_equilibrium && report.ok) {
        for (AgentId x = 0; x < n && report.ok; ++x)
            for (AgentId y = x + 1; y < n; ++y)
                if (eligible(state, x, y, space)) {
                    fail("equilibrium: pair (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is still eligible");
                    break;
                }
    }
    return report;
}

}  // namespace firman
