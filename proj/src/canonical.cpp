#include "sturan/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sturan/graph6.hpp"

namespace sturan {

std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<size_t>(v)]};
            std::vector<int> nc;
            g.neighbors(v).for_each([&](int u) { nc.push_back(color[static_cast<size_t>(u)]); });
            std::sort(nc.begin(), nc.end());
            s.insert(s.end(), nc.begin(), nc.end());
            rank.emplace(s, 0);
            sig[static_cast<size_t>(v)] = std::move(s);
        }
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            const int nc = rank[sig[static_cast<size_t>(v)]];
            if (nc != color[static_cast<size_t>(v)]) changed = true;
            color[static_cast<size_t>(v)] = nc;
        }
        if (!changed) break;
    }
    return color;
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical codes are limited to n <= 11");
    const int total = n * (n - 1) / 2;
    if (total == 0) return 0;
    const std::uint64_t full = (std::uint64_t{1} << total) - 1;
    if (g.size() == 0) return 0;
    if (g.size() == total) return full;

    const auto color = refine_colors(g);
    const int ncells = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> cells(static_cast<size_t>(ncells));
    for (int v = 0; v < n; ++v) cells[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    std::vector<int> cell_of_pos;
    cell_of_pos.reserve(static_cast<size_t>(n));
    for (int c = 0; c < ncells; ++c)
        cell_of_pos.insert(cell_of_pos.end(), cells[static_cast<size_t>(c)].size(), c);

    std::uint64_t best = full;
    std::vector<int> perm(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);

    auto dfs = [&](auto&& self, int pos, std::uint64_t cur) -> void {
        for (int v : cells[static_cast<size_t>(cell_of_pos[static_cast<size_t>(pos)])]) {
            if (used[static_cast<size_t>(v)]) continue;
            std::uint64_t bits = 0;
            const Bitset& row = g.neighbors(v);
            for (int t = 0; t < pos; ++t)
                bits = (bits << 1) | (row.test(perm[static_cast<size_t>(t)]) ? 1u : 0u);
            const std::uint64_t cand = (cur << pos) | bits;
            const int placed = (pos + 1) * pos / 2;
            if (cand > (best >> (total - placed))) continue;
            if (pos + 1 == n) {
                best = cand;
            } else {
                perm[static_cast<size_t>(pos)] = v;
                used[static_cast<size_t>(v)] = 1;
                self(self, pos + 1, cand);
                used[static_cast<size_t>(v)] = 0;
            }
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    const int total = n * (n - 1) / 2;
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if ((code >> (total - 1 - idx)) & 1) g.add_edge(row, col);
    return g;
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace sturan
