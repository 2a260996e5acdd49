#include "polarsim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polarsim {

std::size_t SocialGraph::n_edges() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return deg_sum / 2;
}

int SocialGraph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool SocialGraph::has_edge(int i, int j) const {
    const auto& nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

void SocialGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("self-loop");
    if (i < 0 || j < 0 || i >= n_nodes() || j >= n_nodes())
        throw std::invalid_argument("node id out of range");
    if (has_edge(i, j)) throw std::invalid_argument("duplicate edge");
    auto& ni = adj_[static_cast<std::size_t>(i)];
    auto& nj = adj_[static_cast<std::size_t>(j)];
    ni.insert(std::lower_bound(ni.begin(), ni.end(), j), j);
    nj.insert(std::lower_bound(nj.begin(), nj.end(), i), i);
}

std::vector<std::pair<int, int>> SocialGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n_edges());
    for (int i = 0; i < n_nodes(); ++i)
        for (int j : neighbors(i))
            if (i < j) edges.emplace_back(i, j);
    return edges;
}

std::string SocialGraph::to_edge_list_text() const {
    std::ostringstream out;
    for (const auto& [i, j] : edge_list()) out << i << ' ' << j << '\n';
    return out.str();
}

SocialGraph generate_ba(int n_nodes, int m, std::mt19937_64& rng) {
    if (m < 1) throw std::invalid_argument("ba m must be >= 1");
    if (n_nodes <= m) throw std::invalid_argument("ba requires n_nodes >= m+1");

    SocialGraph g(n_nodes);
    std::vector<int> degree(static_cast<std::size_t>(n_nodes), 0);
    double degree_total = 0;

    for (int i = 0; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            g.add_edge(i, j);
            degree[static_cast<std::size_t>(i)]++;
            degree[static_cast<std::size_t>(j)]++;
            degree_total += 2;
        }
    }

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> targets;
    for (int v = m + 1; v < n_nodes; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            double r = unif(rng) * degree_total;
            int pick = v - 1;
            double acc = 0;
            for (int u = 0; u < v; ++u) {
                acc += degree[static_cast<std::size_t>(u)];
                if (r < acc) {
                    pick = u;
                    break;
                }
            }
            if (std::find(targets.begin(), targets.end(), pick) != targets.end())
                continue;  // without-replacement: reject duplicates
            targets.push_back(pick);
        }
        for (int u : targets) {
            g.add_edge(v, u);
            degree[static_cast<std::size_t>(u)]++;
            degree[static_cast<std::size_t>(v)]++;
            degree_total += 2;
        }
    }
    return g;
}

}  // namespace polarsim
