#include "sturan/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sturan {

PartitionSpec::PartitionSpec(std::vector<int> sizes) : parts(std::move(sizes)) {
    if (parts.empty()) throw std::invalid_argument("partition needs at least one part");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("part sizes must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("part sizes must be non-increasing");
    }
}

int PartitionSpec::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_multipartite(const PartitionSpec& spec) {
    const int n = spec.total();
    Graph g(n);
    int a = 0;
    for (size_t p = 0; p + 1 < spec.parts.size(); ++p) {
        int b = a + spec.parts[p];
        for (int u = a; u < b; ++u)
            for (int v = b; v < n; ++v) g.add_edge(u, v);
        a = b;
    }
    return g;
}

namespace {

PartitionSpec turan_partition(int n, int r) {
    if (r < 1 || r > n)
        throw std::invalid_argument("turan graph needs 1 <= r <= n, got r=" +
                                    std::to_string(r) + " n=" + std::to_string(n));
    const int q = n / r, t = n % r;
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(r));
    for (int i = 0; i < t; ++i) parts.push_back(q + 1);
    for (int i = t; i < r; ++i) parts.push_back(q);
    return PartitionSpec(std::move(parts));
}

}  // namespace

Graph turan_graph(int n, int r) { return complete_multipartite(turan_partition(n, r)); }

long long turan_edge_count(int n, int r) {
    if (r < 1 || r > n)
        throw std::invalid_argument("turan edge count needs 1 <= r <= n");
    const long long q = n / r, t = n % r;
    return q * q * r * (r - 1) / 2 + q * t * (r - 1) + t * (t - 1) / 2;
}

Graph turan_minus(int n, int r) {
    if (r < 2 || r > n - 1)
        throw std::invalid_argument("turan_minus needs 2 <= r <= n-1");
    Graph g = turan_graph(n, r);
    const int q = n / r, t = n % r;
    const int big = q + (t > 0 ? 1 : 0);
    // Part V_i starts at offset i*big while parts of size big last, then q each.
    int offset = big;
    for (int i = 1; i < r; ++i) {
        g.remove_edge(0, offset);
        offset += (i < t) ? big : q;
    }
    return g;
}

Graph kite(long long m, int w) {
    if (w < 2) throw std::invalid_argument("kite clique order must be at least 2");
    const long long clique_edges = static_cast<long long>(w) * (w - 1) / 2;
    if (m < clique_edges + 1)
        throw std::invalid_argument("kite needs at least " + std::to_string(clique_edges + 1) +
                                    " edges for clique order " + std::to_string(w));
    const long long path_edges = m - clique_edges;
    const long long n = w + path_edges;
    if (n > kMaxVertices)
        throw std::invalid_argument("kite order " + std::to_string(n) + " exceeds limit");
    Graph g(static_cast<int>(n));
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v) g.add_edge(u, v);
    for (int v = w; v < static_cast<int>(n); ++v) g.add_edge(v - 1, v);
    return g;
}

Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star needs at least 1 vertex");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

std::vector<std::vector<int>> gregory_layers(int n, int k) {
    if (k < 2 || n < 2 * (k - 1))
        throw std::invalid_argument("gadget needs k >= 2 and n >= 2(k-1)");
    const int w = k - 1;
    std::vector<std::vector<int>> layers;
    int v = 0;
    while (v < n) {
        std::vector<int> layer;
        for (int i = 0; i < w && v < n; ++i) layer.push_back(v++);
        layers.push_back(std::move(layer));
    }
    return layers;
}

Graph gregory_gadget(int n, int k) {
    const auto layers = gregory_layers(n, k);
    Graph g(n);
    for (size_t i = 1; i < layers[0].size(); ++i)
        for (size_t j = 0; j < i; ++j) g.add_edge(layers[0][j], layers[0][i]);
    for (size_t l = 0; l + 1 < layers.size(); ++l)
        for (int u : layers[l])
            for (int v : layers[l + 1]) g.add_edge(u, v);
    return g;
}

}  // namespace sturan
