#pragma once

#include <random>
#include <span>
#include <vector>

#include "polarsim/graph.hpp"

namespace polarsim {

// Mutually exciting post-rate parameters. Excitation exists only along graph
// edges; alpha_in[i][idx] / beta_in[i][idx] describe the jump and decay that
// posts by graph.neighbors(i)[idx] induce on node i's rate.
struct HawkesParams {
    std::vector<double> base_rate;              // mu_i
    std::vector<std::vector<double>> alpha_in;  // alpha_{j->i}
    std::vector<std::vector<double>> beta_in;   // beta_{j->i}

    std::size_t pair_count() const {
        std::size_t n = 0;
        for (const auto& v : alpha_in) n += v.size();
        return n;
    }
};

struct PostEvent {
    double time;
    int author;
};

// Post stream restricted to the observation window [t_start, t_end], where
// t_start is the time of the first generated post. Times are nondecreasing.
struct EventSequence {
    std::vector<PostEvent> events;
    double t_start = 0.0;
    double t_end = 0.0;
};

// Per accepted event: all node rates evaluated at the event time, before the
// excitation jump. Used to cross-check the incremental intensity bookkeeping.
struct GenerationTrace {
    std::vector<std::vector<double>> rates_at_event;
};

// mu_i ~ U[0,1] per node, then (alpha_ji, beta_ji) ~ U[0,1] per ordered
// neighbor pair, observer-major ascending.
HawkesParams sample_params(const SocialGraph& graph, std::mt19937_64& rng);

// From-scratch rate of node i at time t: mu_i plus the decayed excitation of
// every earlier post (t_h < t) authored by a neighbor of i.
double intensity(const HawkesParams& params, const SocialGraph& graph,
                 std::span<const PostEvent> history, int i, double t);

// Ogata thinning from t=0. The observation window starts at the first
// accepted event and spans window_length; candidates beyond the window end
// the simulation. Throws degenerate-process (invalid_argument) if sum mu = 0.
EventSequence generate_events(const HawkesParams& params, const SocialGraph& graph,
                              double window_length, std::mt19937_64& rng,
                              GenerationTrace* trace = nullptr);

}  // namespace polarsim
