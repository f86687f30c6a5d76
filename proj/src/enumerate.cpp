#include "sturan/enumerate.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "sturan/canonical.hpp"
#include "sturan/cliques.hpp"

namespace sturan {

namespace {

// Every class on k vertices arises from the canonical representative of some
// (k-1)-vertex class by attaching a new last vertex to a neighborhood subset,
// so extending all parents with all subsets and deduplicating by canonical
// code is exhaustive. With clique_cap > 0 only K_{cap+1}-free graphs are kept;
// the family is hereditary, so filtered parents still cover everything.
std::vector<Graph> extend(const std::vector<Graph>& parents, int k, int clique_cap) {
    std::set<std::uint64_t> codes;
    if (k == 0) return {Graph(0)};
    for (const auto& parent : parents) {
        const auto pedges = parent.edges();
        const int nb = k - 1;
        for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
            if (clique_cap > 0 && nb > 0) {
                Bitset sel(nb);
                for (int b = 0; b < nb; ++b)
                    if ((mask >> b) & 1) sel.set(b);
                if (has_clique_in(parent, sel, clique_cap)) continue;
            }
            Graph child(k);
            for (auto [u, v] : pedges) child.add_edge(u, v);
            for (int b = 0; b < nb; ++b)
                if ((mask >> b) & 1) child.add_edge(b, nb);
            codes.insert(canonical_code(child));
        }
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t c : codes) out.push_back(graph_from_code(k, c));
    return out;
}

std::mutex cache_mutex;

const std::vector<Graph>& cached_levels(int n, int clique_cap) {
    static std::map<std::pair<int, int>, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    for (int k = 0; k <= n; ++k) {
        const auto key = std::make_pair(k, clique_cap);
        if (cache.count(key)) continue;
        if (k == 0) {
            cache[key] = {Graph(0)};
        } else {
            const auto& parents = cache[std::make_pair(k - 1, clique_cap)];
            cache[key] = extend(parents, k, clique_cap);
        }
    }
    return cache[std::make_pair(n, clique_cap)];
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("enumeration is limited to n <= 9");
    return cached_levels(n, 0);
}

const std::vector<Graph>& enumerate_clique_free(int n, int r) {
    if (n < 0 || n > 9) throw std::invalid_argument("enumeration is limited to n <= 9");
    if (r < 1) throw std::invalid_argument("clique cap must be at least 1");
    if (r >= n) return enumerate_graphs(n);
    return cached_levels(n, r);
}

}  // namespace sturan
