#pragma once

#include <vector>

#include "polarsim/graph.hpp"

namespace polarsim {

// Sign-conditioned comparison model: synchronous DeGroot-style blending with
// biased assimilation for same-sign neighbor pairs and a backfire push for
// opposite-sign pairs. Not a faithful reproduction of any published set of
// equations; it matches the qualitative same-sign/opposite-sign description.
struct BaselineParams {
    double eta = 0.1;          // per-iteration blending weight
    double backfire_gain = 1;  // strength of the opposite-sign push
    int iterations = 100;
};

struct BaselineState {
    std::vector<double> y;  // opinions in [-1, 1]
};

// eta such that eta * max_degree = 0.1 (keeps same-sign dynamics contractive).
double default_eta(const SocialGraph& graph);

// One synchronous step: y_i += eta * sum_{j in neighbors} s_ij (y_j - y_i)
// with s_ij = +1 when y_i*y_j >= 0 and -backfire_gain otherwise; the result
// is clamped to [-1, 1]. All updates read the pre-step state.
BaselineState baseline_step(const BaselineState& state, const SocialGraph& graph,
                            const BaselineParams& params);

// Iterates baseline_step, returning every state including the initial one.
std::vector<BaselineState> run_baseline(const SocialGraph& graph, BaselineState initial,
                                        const BaselineParams& params);

}  // namespace polarsim
