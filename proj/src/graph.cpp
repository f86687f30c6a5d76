#include "sturan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sturan {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    adj_.assign(static_cast<size_t>(n), Bitset(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[static_cast<size_t>(u)].test(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adj_[static_cast<size_t>(u)].test(v)) return;
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[static_cast<size_t>(u)].test(v)) return;
    adj_[static_cast<size_t>(u)].reset(v);
    adj_[static_cast<size_t>(v)].reset(u);
    --m_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)].count();
}

const Bitset& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<size_t>(u)].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> comps;
    Bitset seen(n);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp;
        seen.set(s);
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            g.neighbors(u).for_each([&](int v) {
                if (!seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

}  // namespace sturan
