#pragma once

#include <random>
#include <string>
#include <vector>

#include "polarsim/graph.hpp"
#include "polarsim/hawkes.hpp"

namespace polarsim {

struct OpinionState {
    std::vector<double> o;  // o_i in [-1, 1]
};

// Empathy/repulsion parameters. p is the uniform empathy probability; a
// nonempty p_per_user overrides it node by node.
struct DynamicsParams {
    double p = 0.5;
    double k = 2.0;
    double c = 0.05;
    std::vector<double> p_per_user;

    double empathy_prob(int i) const {
        return p_per_user.empty() ? p : p_per_user[static_cast<std::size_t>(i)];
    }
    void validate() const;  // throws invalid_argument unless k>0, c>0, c*k<=1, p in [0,1]
};

enum class Reaction { empathy, repulsion };

struct ReactionRecord {
    double time;
    int author;
    int observer;
    Reaction reaction;
    double delta;
};

struct Trajectory {
    std::vector<double> times;                   // times[0] = window start
    std::vector<std::vector<double>> snapshots;  // snapshots[0] = initial state
    std::vector<ReactionRecord> reactions;
};

// Movement toward the post opinion: Delta*c*k*exp(-k|Delta|), Delta = o_p - o_i.
double empathy_delta(double o_i, double o_p, double k, double c);

// Movement away from the post under the periodic distance |Delta'| = 2-|Delta|:
// toward +1 when Delta <= 0, toward -1 when Delta > 0.
double repulsion_delta(double o_i, double o_p, double k, double c);

// One post by `author` at `time`: every neighbor reacts to the author's
// current opinion snapshot, empathizing with probability p (else repulsed).
// Observers are visited in ascending node id. The author is unchanged.
void apply_post(OpinionState& state, const SocialGraph& graph, int author,
                const DynamicsParams& params, std::mt19937_64& rng, double time,
                std::vector<ReactionRecord>* log = nullptr);

// Replays an event sequence in time order, snapshotting after every post.
Trajectory run_replay(const SocialGraph& graph, const EventSequence& events,
                      OpinionState initial, const DynamicsParams& params,
                      std::mt19937_64& rng);

}  // namespace polarsim
