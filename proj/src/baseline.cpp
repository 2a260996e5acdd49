#include "polarsim/baseline.hpp"

#include <algorithm>
#include <stdexcept>

namespace polarsim {

double default_eta(const SocialGraph& graph) {
    const int d = graph.max_degree();
    return d > 0 ? 0.5 / d : 0.5;
}

BaselineState baseline_step(const BaselineState& state, const SocialGraph& graph,
                            const BaselineParams& params) {
    if (static_cast<int>(state.y.size()) != graph.n_nodes())
        throw std::invalid_argument("state size does not match graph");

    BaselineState next = state;
    for (int i = 0; i < graph.n_nodes(); ++i) {
        const double yi = state.y[static_cast<std::size_t>(i)];
        double drift = 0.0;
        for (int j : graph.neighbors(i)) {
            const double yj = state.y[static_cast<std::size_t>(j)];
            const double s = (yi * yj >= 0.0) ? 1.0 : -params.backfire_gain;
            drift += s * (yj - yi);
        }
        next.y[static_cast<std::size_t>(i)] =
            std::clamp(yi + params.eta * drift, -1.0, 1.0);
    }
    return next;
}

std::vector<BaselineState> run_baseline(const SocialGraph& graph, BaselineState initial,
                                        const BaselineParams& params) {
    std::vector<BaselineState> states;
    states.reserve(static_cast<std::size_t>(params.iterations) + 1);
    states.push_back(std::move(initial));
    for (int it = 0; it < params.iterations; ++it)
        states.push_back(baseline_step(states.back(), graph, params));
    return states;
}

}  // namespace polarsim
