#pragma once

#include <vector>

#include "firman/dynamics.hpp"
#include "firman/network.hpp"

namespace fixtures {

// Six-agent worked example: two groups (A..D majority, E..F minority) with
// hand-picked outreachability and capacity. Its equilibrium network holds
// exactly the six ties below with degrees A:2 B:2 C:2 D:3 E:2 F:1.
enum : firman::AgentId { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5 };

inline std::vector<firman::Agent> six_agents() {
    return {
        {A, {0}, 0, 3},
        {B, {0}, 1, 2},
        {C, {0}, 0, 2},
        {D, {0}, 1, 3},
        {E, {1}, 1, 2},
        {F, {1}, 1, 3},
    };
}

inline const std::vector<firman::Edge>& six_ties() {
    static const std::vector<firman::Edge> ties = {
        {A, C}, {A, D}, {B, D}, {B, E}, {C, D}, {E, F},
    };
    return ties;
}

inline firman::NetworkState six_agent_network(const firman::IdentitySpace& space) {
    firman::NetworkState state{six_agents()};
    for (const auto& [x, y] : six_ties()) state.add_edge(x, y, space);
    return state;
}

}  // namespace fixtures
