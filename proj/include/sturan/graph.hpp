#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sturan/bits.hpp"

namespace sturan {

inline constexpr int kMaxVertices = 4096;

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
// Adjacency is kept as one bit row per vertex; the edge count is cached.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long size() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    const Bitset& neighbors(int v) const;

    // Edge list sorted by (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

Graph complement(const Graph& g);

// Order-0 and order-1 graphs count as connected.
bool is_connected(const Graph& g);

// Vertex sets of the connected components, each sorted ascending,
// components ordered by their smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Induced subgraph on the given vertices (must be distinct and in range);
// vertex i of the result corresponds to verts[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

}  // namespace sturan
