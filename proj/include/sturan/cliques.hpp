#pragma once

#include <optional>
#include <vector>

#include "sturan/families.hpp"
#include "sturan/graph.hpp"

namespace sturan {

// Per-edge order of the largest clique containing that edge, plus the global
// clique number and a small pool of witness cliques for optimizer warm starts.
struct EdgeCliqueProfile {
    int omega = 0;
    struct Entry {
        int u, v, c;
    };
    std::vector<Entry> edge_orders;          // lexicographic by (u, v), u < v
    std::vector<std::vector<int>> cliques;   // deduped witnesses; [0] is a maximum clique

    int order_of(int u, int v) const;
};

// omega(g): 0 for the empty graph, 1 when edgeless, else the max clique order.
int clique_number(const Graph& g);

// A maximum clique as a sorted vertex list ({} for n=0, {0} when edgeless).
std::vector<int> maximum_clique(const Graph& g);

// True when the subgraph induced on `allowed` contains a clique of `size` vertices.
bool has_clique_in(const Graph& g, const Bitset& allowed, int size);

// c(e) = 2 + max clique order inside N(u) ∩ N(v) for every edge uv.
EdgeCliqueProfile edge_clique_orders(const Graph& g);

// Part sizes when g is complete multipartite up to isolated vertices, else
// nullopt. Edgeless nonempty graphs report the single part (n).
std::optional<PartitionSpec> complete_multipartite_parts(const Graph& g);

// Exact chromatic number; 0 for the empty graph. Guarded to n <= 16.
int chromatic_number(const Graph& g);

}  // namespace sturan
