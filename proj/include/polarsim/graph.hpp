#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace polarsim {

// Undirected social network. Neighbor lists are kept sorted ascending.
class SocialGraph {
public:
    SocialGraph() = default;
    explicit SocialGraph(int n_nodes) : adj_(static_cast<std::size_t>(n_nodes)) {}

    int n_nodes() const { return static_cast<int>(adj_.size()); }
    std::size_t n_edges() const;
    const std::vector<int>& neighbors(int i) const { return adj_.at(static_cast<std::size_t>(i)); }
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
    int max_degree() const;
    bool has_edge(int i, int j) const;

    // Adds the undirected edge {i, j}. Rejects self-loops and duplicates.
    void add_edge(int i, int j);

    // Sorted edge list, i < j in each pair, pairs ascending.
    std::vector<std::pair<int, int>> edge_list() const;

    // One "i j" pair per line, same order as edge_list().
    std::string to_edge_list_text() const;

private:
    std::vector<std::vector<int>> adj_;
};

// Barabasi-Albert graph: initial clique on m+1 nodes, then each new node
// attaches m edges by preferential attachment (degree-proportional roulette,
// duplicate targets rejected). Requires n_nodes >= m+1, m >= 1.
SocialGraph generate_ba(int n_nodes, int m, std::mt19937_64& rng);

}  // namespace polarsim
