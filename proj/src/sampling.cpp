#include "firman/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace firman {

void PopulationSpec::validate() const {
    std::string bad;
    auto flag = [&bad](const std::string& field) {
        if (!bad.empty()) bad += ", ";
        bad += field;
    };
    if (n < 2) flag("n (must be >= 2)");
    if (!(p >= 0.0 && p <= 1.0)) flag("p (must be in [0, 1])");
    if (!(q >= 0.0 && q <= 1.0)) flag("q (must be in [0, 1])");
    if (!(tc_mean > 0.0)) flag("tc_mean (must be > 0)");
    if (!(tc_variance >= 0.0)) flag("tc_variance (must be >= 0)");
    if (!bad.empty()) throw std::invalid_argument("PopulationSpec: invalid " + bad);
}

int sample_si(const PopulationSpec& spec, Rng& rng) { return rng.bernoulli(spec.p) ? 1 : 0; }

int sample_to(const PopulationSpec& spec, Rng& rng) { return rng.bernoulli(spec.q) ? 1 : 0; }

int sample_tc(const PopulationSpec& spec, Rng& rng) {
    const double draw = rng.normal(spec.tc_mean, std::sqrt(spec.tc_variance));
    const long rounded = std::lround(draw);  // halves away from zero
    return static_cast<int>(std::max(1L, rounded));
}

std::vector<Agent> sample_population(const PopulationSpec& spec, Rng& rng) {
    spec.validate();
    std::vector<Agent> agents;
    agents.reserve(static_cast<std::size_t>(spec.n));
    for (int id = 0; id < spec.n; ++id) {
        Agent a;
        a.id = id;
        a.si.resize(static_cast<std::size_t>(spec.space.dims()));
        for (int d = 0; d < spec.space.dims(); ++d)
            a.si[static_cast<std::size_t>(d)] = sample_si(spec, rng);
        a.outreach = sample_to(spec, rng);
        a.capacity = sample_tc(spec, rng);
        agents.push_back(std::move(a));
    }
    return agents;
}

}  // namespace firman
