#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sturan/canonical.hpp"
#include "sturan/cliques.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/graph6.hpp"

using namespace sturan;

namespace {

bool subset_is_clique(const Graph& g, unsigned mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if (mask & (1u << v)) verts.push_back(v);
    for (size_t i = 1; i < verts.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (!g.has_edge(verts[j], verts[i])) return false;
    return true;
}

int brute_omega(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 1;
    for (unsigned mask = 1; mask < (1u << g.order()); ++mask)
        if (subset_is_clique(g, mask)) best = std::max(best, __builtin_popcount(mask));
    return best;
}

int brute_edge_order(const Graph& g, int u, int v) {
    int best = 2;
    for (unsigned mask = 1; mask < (1u << g.order()); ++mask) {
        if (!(mask & (1u << u)) || !(mask & (1u << v))) continue;
        if (subset_is_clique(g, mask)) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("clique number matches subset brute force through n = 7") {
    for (int n = 0; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            CHECK(clique_number(g) == brute_omega(g));
        }
    }
}

TEST_CASE("maximum clique is a clique of maximum order") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto clq = maximum_clique(g);
            CHECK(static_cast<int>(clq.size()) == clique_number(g));
            for (size_t i = 1; i < clq.size(); ++i)
                for (size_t j = 0; j < i; ++j) CHECK(g.has_edge(clq[j], clq[i]));
        }
    }
}

TEST_CASE("edge clique orders match subset brute force through n = 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto profile = edge_clique_orders(g);
            CHECK(profile.omega == clique_number(g));
            REQUIRE(profile.edge_orders.size() == static_cast<size_t>(g.size()));
            for (const auto& e : profile.edge_orders) {
                CHECK(e.c == brute_edge_order(g, e.u, e.v));
                CHECK(profile.order_of(e.u, e.v) == e.c);
                CHECK(profile.order_of(e.v, e.u) == e.c);
            }
            if (g.size() > 0) {
                REQUIRE(!profile.cliques.empty());
                CHECK(static_cast<int>(profile.cliques[0].size()) == profile.omega);
            }
        }
    }
}

TEST_CASE("edge clique orders on named graphs") {
    // paw: triangle 0,1,2 plus pendant 3 on vertex 2
    const Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const auto p = edge_clique_orders(paw);
    CHECK(p.omega == 3);
    CHECK(p.order_of(0, 1) == 3);
    CHECK(p.order_of(2, 3) == 2);

    const auto kt = edge_clique_orders(kite(10, 4));
    CHECK(kt.omega == 4);
    CHECK(kt.order_of(0, 1) == 4);
    CHECK(kt.order_of(3, 4) == 2);
    CHECK(kt.order_of(6, 7) == 2);
}

TEST_CASE("complete multipartite recognition round trips") {
    for (const std::vector<int> parts :
         {std::vector<int>{3, 2, 1}, {2, 2, 2}, {4, 1}, {1, 1, 1, 1}, {5}}) {
        const Graph g = complete_multipartite(PartitionSpec(parts));
        const auto rec = complete_multipartite_parts(g);
        REQUIRE(rec.has_value());
        CHECK(rec->parts == parts);
        // recognition is label-invariant
        const auto rec2 = complete_multipartite_parts(canonical_form(g));
        REQUIRE(rec2.has_value());
        CHECK(rec2->parts == parts);
    }

    CHECK_FALSE(complete_multipartite_parts(cycle_graph(5)).has_value());
    CHECK_FALSE(complete_multipartite_parts(path_graph(4)).has_value());
    CHECK_FALSE(complete_multipartite_parts(kite(10, 4)).has_value());
    CHECK_FALSE(complete_multipartite_parts(Graph(0)).has_value());

    // P_3 is K_{1,2}; isolated vertices are tolerated
    const auto p3 = complete_multipartite_parts(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(p3->parts == std::vector<int>{2, 1});
    Graph padded = Graph::from_edges(5, {{0, 1}});
    const auto pad = complete_multipartite_parts(padded);
    REQUIRE(pad.has_value());
    CHECK(pad->parts == std::vector<int>{1, 1});

    const auto edgeless = complete_multipartite_parts(Graph(4));
    REQUIRE(edgeless.has_value());
    CHECK(edgeless->parts == std::vector<int>{4});
}

TEST_CASE("chromatic number on named graphs") {
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(path_graph(4)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(turan_graph(10, 3)) == 3);
    CHECK(chromatic_number(complete_multipartite(PartitionSpec({3, 3}))) == 2);

    const Graph petersen = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(chromatic_number(petersen) == 3);

    Graph k10e = complete_graph(10);
    k10e.remove_edge(0, 1);
    CHECK(chromatic_number(k10e) == 9);

    // chi >= omega, chi <= n over the census
    for (const Graph& g : enumerate_graphs(5)) {
        const int chi = chromatic_number(g);
        CHECK(chi >= clique_number(g));
        CHECK(chi <= g.order());
    }
}
