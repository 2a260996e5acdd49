#include "polarsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace polarsim {

namespace {

void check_inputs(double o_i, double o_p, double k, double c) {
    if (!(o_i >= -1.0 && o_i <= 1.0)) throw std::invalid_argument("o_i out of [-1,1]");
    if (!(o_p >= -1.0 && o_p <= 1.0)) throw std::invalid_argument("o_p out of [-1,1]");
    if (!(k > 0)) throw std::invalid_argument("k must be > 0");
    if (!(c > 0)) throw std::invalid_argument("c must be > 0");
    if (!(c * k <= 1.0)) throw std::invalid_argument("c*k must be <= 1");
}

}  // namespace

void DynamicsParams::validate() const {
    if (!(k > 0)) throw std::invalid_argument("k must be > 0");
    if (!(c > 0)) throw std::invalid_argument("c must be > 0");
    if (!(c * k <= 1.0)) throw std::invalid_argument("c*k must be <= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p out of [0,1]");
    for (double pi : p_per_user)
        if (!(pi >= 0.0 && pi <= 1.0)) throw std::invalid_argument("p_i out of [0,1]");
}

double empathy_delta(double o_i, double o_p, double k, double c) {
    check_inputs(o_i, o_p, k, c);
    const double delta = o_p - o_i;
    return delta * c * k * std::exp(-k * std::fabs(delta));
}

double repulsion_delta(double o_i, double o_p, double k, double c) {
    check_inputs(o_i, o_p, k, c);
    const double delta = o_p - o_i;
    const double dist = 2.0 - std::fabs(delta);  // periodic boundary at +-1
    const double gain = c * k * std::exp(-k * dist);
    if (delta <= 0.0) return (1.0 - o_i) * gain;  // push toward +1
    return -(1.0 + o_i) * gain;                   // push toward -1
}

void apply_post(OpinionState& state, const SocialGraph& graph, int author,
                const DynamicsParams& params, std::mt19937_64& rng, double time,
                std::vector<ReactionRecord>* log) {
    if (author < 0 || author >= graph.n_nodes())
        throw std::invalid_argument("author out of range");
    const double o_p = state.o[static_cast<std::size_t>(author)];
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int obs : graph.neighbors(author)) {
        double& o_i = state.o[static_cast<std::size_t>(obs)];
        const double u = unif(rng);
        const bool empathetic = u < params.empathy_prob(obs);
        const double d = empathetic ? empathy_delta(o_i, o_p, params.k, params.c)
                                    : repulsion_delta(o_i, o_p, params.k, params.c);
        o_i += d;
        if (log)
            log->push_back({time, author, obs,
                            empathetic ? Reaction::empathy : Reaction::repulsion, d});
    }
}

Trajectory run_replay(const SocialGraph& graph, const EventSequence& events,
                      OpinionState initial, const DynamicsParams& params,
                      std::mt19937_64& rng) {
    params.validate();
    if (static_cast<int>(initial.o.size()) != graph.n_nodes())
        throw std::invalid_argument("state size does not match graph");

    Trajectory traj;
    traj.times.push_back(events.t_start);
    traj.snapshots.push_back(initial.o);

    OpinionState state = std::move(initial);
    for (const PostEvent& ev : events.events) {
        apply_post(state, graph, ev.author, params, rng, ev.time, &traj.reactions);
        traj.times.push_back(ev.time);
        traj.snapshots.push_back(state.o);
    }
    return traj;
}

}  // namespace polarsim
