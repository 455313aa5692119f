#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace firman {

using AgentId = std::int32_t;

/// Weighted social identity space. One coordinate per group-membership
/// dimension; `weights` scales how much a mismatch on each dimension
/// contributes to the distance between two agents.
class IdentitySpace {
public:
    explicit IdentitySpace(std::vector<double> weights) : weights_(std::move(weights)) {
        if (weights_.empty())
            throw std::invalid_argument("IdentitySpace: at least one dimension required");
        for (double w : weights_)
            if (!(w >= 0.0))
                throw std::invalid_argument("IdentitySpace: weights must be non-negative");
    }

    /// One binary dimension, unit weight.
    static IdentitySpace single(double weight = 1.0) { return IdentitySpace({weight}); }

    int dims() const { return static_cast<int>(weights_.size()); }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

/// A node in identity space. `si` holds one integer coordinate per
/// dimension (binary group membership here). `outreach` (TO) is the
/// maximum tie length the agent can generate; `capacity` (TC) is the
/// maximum number of simultaneous friendships it can maintain.
struct Agent {
    AgentId id = 0;
    std::vector<int> si;
    int outreach = 0;
    int capacity = 0;
};

/// Social identity distance: weighted Manhattan distance between two
/// agents' coordinates. Symmetric, non-negative, zero for same-group
/// agents.
inline double identity_distance(const Agent& x, const Agent& y, const IdentitySpace& space) {
    const auto& w = space.weights();
    if (x.si.size() != w.size() || y.si.size() != w.size())
        throw std::invalid_argument(
            "identity_distance: agent " + std::to_string(x.si.size() != w.size() ? x.id : y.id) +
            " does not match the identity space dimensions");
    double dist = 0.0;
    for (std::size_t d = 0; d < w.size(); ++d)
        dist += w[d] * std::abs(x.si[d] - y.si[d]);
    return dist;
}

}  // namespace firman
