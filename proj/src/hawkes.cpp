#include "polarsim/hawkes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polarsim {

HawkesParams sample_params(const SocialGraph& graph, std::mt19937_64& rng) {
    const int n = graph.n_nodes();
    if (n == 0) throw std::invalid_argument("empty graph");
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    HawkesParams p;
    p.base_rate.resize(static_cast<std::size_t>(n));
    for (auto& mu : p.base_rate) mu = unif(rng);

    p.alpha_in.resize(static_cast<std::size_t>(n));
    p.beta_in.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& nb = graph.neighbors(i);
        auto& a = p.alpha_in[static_cast<std::size_t>(i)];
        auto& b = p.beta_in[static_cast<std::size_t>(i)];
        a.resize(nb.size());
        b.resize(nb.size());
        for (std::size_t idx = 0; idx < nb.size(); ++idx) {
            a[idx] = unif(rng);
            b[idx] = unif(rng);
        }
    }
    return p;
}

double intensity(const HawkesParams& params, const SocialGraph& graph,
                 std::span<const PostEvent> history, int i, double t) {
    if (i < 0 || i >= graph.n_nodes()) throw std::invalid_argument("node id out of range");
    const auto& nb = graph.neighbors(i);
    double lambda = params.base_rate[static_cast<std::size_t>(i)];
    for (const PostEvent& ev : history) {
        if (!(ev.time < t)) continue;
        auto it = std::lower_bound(nb.begin(), nb.end(), ev.author);
        if (it == nb.end() || *it != ev.author) continue;
        const std::size_t idx = static_cast<std::size_t>(it - nb.begin());
        const double a = params.alpha_in[static_cast<std::size_t>(i)][idx];
        const double b = params.beta_in[static_cast<std::size_t>(i)][idx];
        lambda += a * std::exp(-b * (t - ev.time));
    }
    return lambda;
}

EventSequence generate_events(const HawkesParams& params, const SocialGraph& graph,
                              double window_length, std::mt19937_64& rng,
                              GenerationTrace* trace) {
    if (window_length <= 0) throw std::invalid_argument("window_length must be > 0");
    const int n = graph.n_nodes();
    const double mu_sum = std::accumulate(params.base_rate.begin(), params.base_rate.end(), 0.0);
    if (mu_sum <= 0) throw std::invalid_argument("degenerate process: sum of base rates is zero");

    // Per ordered pair excitation state, decayed lazily to the current time.
    std::vector<std::vector<double>> excite(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        excite[static_cast<std::size_t>(i)].assign(graph.neighbors(i).size(), 0.0);

    // author -> (observer, index of author in observer's neighbor list)
    std::vector<std::vector<std::pair<int, std::size_t>>> fanout(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& nb = graph.neighbors(i);
        for (std::size_t idx = 0; idx < nb.size(); ++idx)
            fanout[static_cast<std::size_t>(nb[idx])].emplace_back(i, idx);
    }

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> rates(static_cast<std::size_t>(n));

    auto total_rate = [&]() {
        double sum = 0;
        for (int i = 0; i < n; ++i) {
            double lam = params.base_rate[static_cast<std::size_t>(i)];
            for (double s : excite[static_cast<std::size_t>(i)]) lam += s;
            rates[static_cast<std::size_t>(i)] = lam;
            sum += lam;
        }
        return sum;
    };

    EventSequence seq;
    double t = 0.0;
    double t_first = -1.0;
    double t_end = std::numeric_limits<double>::infinity();
    double bound = total_rate();  // = mu_sum; rates are non-increasing between events

    while (true) {
        const double w = -std::log1p(-unif(rng)) / bound;
        const double t_cand = t + w;
        if (t_cand > t_end) break;

        // decay excitation to the candidate time
        for (int i = 0; i < n; ++i) {
            const auto& betas = params.beta_in[static_cast<std::size_t>(i)];
            auto& s = excite[static_cast<std::size_t>(i)];
            for (std::size_t idx = 0; idx < s.size(); ++idx)
                s[idx] *= std::exp(-betas[idx] * w);
        }
        t = t_cand;
        const double lambda_total = total_rate();

        const double u = unif(rng);
        if (u * bound <= lambda_total) {
            // accepted; attribute to a node proportionally to its rate
            double r = unif(rng) * lambda_total;
            int author = n - 1;
            double acc = 0;
            for (int i = 0; i < n; ++i) {
                acc += rates[static_cast<std::size_t>(i)];
                if (r < acc) {
                    author = i;
                    break;
                }
            }
            if (t_first < 0) {
                t_first = t;
                t_end = t_first + window_length;
            }
            seq.events.push_back({t, author});
            if (trace) trace->rates_at_event.push_back(rates);
            for (const auto& [obs, idx] : fanout[static_cast<std::size_t>(author)])
                excite[static_cast<std::size_t>(obs)][idx] +=
                    params.alpha_in[static_cast<std::size_t>(obs)][idx];
            bound = total_rate();
        } else {
            bound = lambda_total;
        }
    }

    seq.t_start = t_first;
    seq.t_end = t_first + window_length;
    return seq;
}

}  // namespace polarsim
