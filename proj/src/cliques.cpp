#include "sturan/cliques.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sturan {

namespace {

// Branch-and-bound maximum clique with a greedy-coloring upper bound.
// All iteration is index-ordered so results are deterministic.
struct CliqueSearcher {
    const Graph& g;
    std::vector<int> best, cur;
    int target = 0;  // when > 0, stop as soon as a clique of this size is found
    bool done = false;

    explicit CliqueSearcher(const Graph& graph) : g(graph) {}

    void color_sort(const Bitset& p, std::vector<int>& order, std::vector<int>& bound) {
        Bitset rest = p;
        int color = 0;
        while (rest.any()) {
            ++color;
            Bitset avail = rest;
            while (avail.any()) {
                int v = avail.lowest();
                order.push_back(v);
                bound.push_back(color);
                rest.reset(v);
                avail.reset(v);
                avail -= g.neighbors(v);
            }
        }
    }

    void expand(Bitset p) {
        std::vector<int> order, bound;
        color_sort(p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur.size()) + bound[static_cast<size_t>(i)] <=
                static_cast<int>(best.size()))
                return;
            int v = order[static_cast<size_t>(i)];
            cur.push_back(v);
            Bitset next = p & g.neighbors(v);
            if (next.any()) {
                expand(next);
            } else if (cur.size() > best.size()) {
                best = cur;
                if (target > 0 && static_cast<int>(best.size()) >= target) done = true;
            }
            cur.pop_back();
            if (done) return;
            p.reset(v);
        }
    }

    std::vector<int> run(const Bitset& candidates) {
        best.clear();
        cur.clear();
        if (candidates.any()) expand(candidates);
        std::sort(best.begin(), best.end());
        return best;
    }
};

Bitset all_vertices(const Graph& g) {
    Bitset b(g.order());
    for (int v = 0; v < g.order(); ++v) b.set(v);
    return b;
}

struct WordsHash {
    size_t operator()(const std::vector<std::uint64_t>& w) const {
        size_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t x : w) {
            h ^= static_cast<size_t>(x);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

}  // namespace

int EdgeCliqueProfile::order_of(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edge_orders.begin(), edge_orders.end(), std::pair{u, v},
                               [](const Entry& e, const std::pair<int, int>& key) {
                                   return std::pair{e.u, e.v} < key;
                               });
    if (it == edge_orders.end() || it->u != u || it->v != v)
        throw std::invalid_argument("edge not in profile");
    return it->c;
}

std::vector<int> maximum_clique(const Graph& g) {
    if (g.order() == 0) return {};
    if (g.size() == 0) return {0};
    CliqueSearcher s(g);
    return s.run(all_vertices(g));
}

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    return static_cast<int>(maximum_clique(g).size());
}

bool has_clique_in(const Graph& g, const Bitset& allowed, int size) {
    if (size <= 0) return true;
    if (allowed.count() < size) return false;
    if (size == 1) return true;
    CliqueSearcher s(g);
    s.target = size;
    return static_cast<int>(s.run(allowed).size()) >= size;
}

EdgeCliqueProfile edge_clique_orders(const Graph& g) {
    EdgeCliqueProfile prof;
    prof.omega = clique_number(g);
    if (g.order() == 0) return prof;

    constexpr size_t kWitnessCap = 32;
    std::set<std::vector<int>> seen;
    auto add_witness = [&](const std::vector<int>& clq) {
        if (prof.cliques.size() >= kWitnessCap) return;
        if (seen.insert(clq).second) prof.cliques.push_back(clq);
    };
    add_witness(maximum_clique(g));

    std::unordered_map<std::vector<std::uint64_t>, std::vector<int>, WordsHash> memo;
    prof.edge_orders.reserve(static_cast<size_t>(g.size()));
    for (auto [u, v] : g.edges()) {
        Bitset common = g.neighbors(u) & g.neighbors(v);
        std::vector<int> inner;
        if (common.any()) {
            auto [it, fresh] = memo.try_emplace(common.words());
            if (fresh) {
                CliqueSearcher s(g);
                it->second = s.run(common);
            }
            inner = it->second;
        }
        prof.edge_orders.push_back({u, v, 2 + static_cast<int>(inner.size())});
        inner.push_back(u);
        inner.push_back(v);
        std::sort(inner.begin(), inner.end());
        add_witness(inner);
    }
    return prof;
}

std::optional<PartitionSpec> complete_multipartite_parts(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    if (g.size() == 0) return PartitionSpec({n});

    Bitset active(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) active.set(v);

    // Group non-isolated vertices by identical neighborhoods.
    std::map<std::vector<std::uint64_t>, std::vector<int>> groups;
    active.for_each([&](int v) { groups[g.neighbors(v).words()].push_back(v); });

    std::vector<int> sizes;
    for (const auto& [words, verts] : groups) {
        Bitset expected = active;
        for (int v : verts) expected.reset(v);
        if (!(g.neighbors(verts[0]) == expected)) return std::nullopt;
        sizes.push_back(static_cast<int>(verts.size()));
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return PartitionSpec(std::move(sizes));
}

namespace {

// Exact k-colorability test: most-saturated-vertex-first backtracking with
// new-color symmetry breaking.
bool colorable(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), -1);
    int colored = 0;

    auto solve = [&](auto&& self) -> bool {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            std::uint32_t mask = 0;
            g.neighbors(v).for_each([&](int u) {
                if (color[static_cast<size_t>(u)] >= 0)
                    mask |= 1u << color[static_cast<size_t>(u)];
            });
            int sat = __builtin_popcount(mask);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint32_t forbidden = 0;
        g.neighbors(pick).for_each([&](int u) {
            if (color[static_cast<size_t>(u)] >= 0) forbidden |= 1u << color[static_cast<size_t>(u)];
        });
        int used = 0;
        for (int v = 0; v < n; ++v) used = std::max(used, color[static_cast<size_t>(v)] + 1);
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden & (1u << c)) continue;
            color[static_cast<size_t>(pick)] = c;
            ++colored;
            if (self(self)) return true;
            color[static_cast<size_t>(pick)] = -1;
            --colored;
        }
        return false;
    };
    return solve(solve);
}

}  // namespace

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 16)
        throw std::invalid_argument("chromatic_number is exact-only and limited to n <= 16");
    if (n == 0) return 0;
    if (g.size() == 0) return 1;
    const int lo = clique_number(g);
    for (int k = lo; k < n; ++k)
        if (colorable(g, k)) return k;
    return n;
}

}  // namespace sturan
