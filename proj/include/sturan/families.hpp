#pragma once

#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

// Part sizes of a complete multipartite graph, sorted non-increasing.
struct PartitionSpec {
    std::vector<int> parts;

    explicit PartitionSpec(std::vector<int> sizes);

    int total() const;
    int count() const { return static_cast<int>(parts.size()); }
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Vertices labeled part-by-part in spec order; edges between distinct parts.
Graph complete_multipartite(const PartitionSpec& spec);

// T_r(n): complete r-partite, part sizes ceil(n/r) and floor(n/r).
Graph turan_graph(int n, int r);

// e(T_r(n)) as an exact integer.
long long turan_edge_count(int n, int r);

// T_r(n) minus a star with r-1 edges: center is vertex 0 (first vertex of the
// largest part), leaves are the first vertex of each other part.
Graph turan_minus(int n, int r);

// Clique K_w with a pendant path of m - C(w,2) edges attached at vertex w-1.
// Path vertices are labeled w, w+1, ... after the clique.
Graph kite(long long m, int w);

// Star on n vertices: vertex 0 adjacent to 1..n-1.
Graph star(int n);

// Layered gadget: V_0 is a clique of size k-1, followed by independent layers
// of size k-1 (last layer may be smaller), consecutive layers fully joined.
Graph gregory_gadget(int n, int k);

// The layer vertex sets of gregory_gadget(n, k), empty tail trimmed.
std::vector<std::vector<int>> gregory_layers(int n, int k);

}  // namespace sturan
