#include <doctest.h>

#include <string>
#include <vector>

#include "sturan/canonical.hpp"
#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/graph6.hpp"

using namespace sturan;

TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 0);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.size() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    g.add_edge(0, 1);
    CHECK(g.size() == 2);
    g.remove_edge(0, 1);
    CHECK(g.size() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);

    const auto es = Graph::from_edges(3, {{2, 0}, {0, 1}}).edges();
    REQUIRE(es.size() == 2);
    CHECK(es[0] == std::pair<int, int>{0, 1});
    CHECK(es[1] == std::pair<int, int>{0, 2});
}

TEST_CASE("graph6 decodes known strings") {
    const Graph k2 = from_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    const Graph k3 = from_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);

    const Graph e5 = from_graph6("D??");
    CHECK(e5.order() == 5);
    CHECK(e5.size() == 0);

    CHECK(from_graph6("?").order() == 0);
}

TEST_CASE("graph6 round trips") {
    for (const std::string s : {"A_", "Bw", "D??", "DIk", "Cx", "E]~o", "GIQ|to"}) {
        CHECK(to_graph6(from_graph6(s)) == s);
    }
    for (const Graph& g : {turan_graph(10, 3), kite(12, 4), star(9), cycle_graph(5),
                           gregory_gadget(11, 3), complete_graph(7)}) {
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // 4-byte header kicks in above n = 62
    const Graph big = star(70);
    const std::string enc = to_graph6(big);
    CHECK(enc.substr(0, 1) == "~");
    CHECK(from_graph6(enc) == big);
}

TEST_CASE("graph6 errors carry byte offsets") {
    try {
        from_graph6("B\x1c");
        FAIL("expected graph6_error");
    } catch (const graph6_error& e) {
        CHECK(e.offset() == 1);
    }
    try {
        from_graph6("E??");  // body too short for n = 6
        FAIL("expected graph6_error");
    } catch (const graph6_error& e) {
        CHECK(e.offset() >= 1);
    }
    CHECK_THROWS_AS(from_graph6(""), graph6_error);
    CHECK_THROWS_AS(from_graph6("A_x"), graph6_error);  // trailing bytes
    CHECK_THROWS_AS(from_graph6("A" "\x7f"), graph6_error);
    // padding bits beyond the triangle must be zero
    CHECK_THROWS_AS(from_graph6("A" "\x7e"), graph6_error);
}

TEST_CASE("complement and connectivity") {
    const Graph c5 = cycle_graph(5);
    CHECK(isomorphic(complement(c5), c5));

    CHECK(is_connected(c5));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
    Graph two(5);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_FALSE(is_connected(two));
    const auto comps = connected_components(two);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
    CHECK(comps[2] == std::vector<int>{4});

    const Graph sub = induced_subgraph(cycle_graph(6), {0, 1, 2});
    CHECK(sub.order() == 3);
    CHECK(sub.size() == 2);
}

TEST_CASE("families have the right sizes") {
    CHECK(turan_graph(10, 3).size() == 33);
    CHECK(turan_graph(7, 2).size() == 12);
    CHECK(turan_edge_count(10, 3) == 33);
    CHECK(turan_edge_count(7, 2) == 12);
    CHECK(turan_edge_count(100, 7) == turan_graph(100, 7).size());

    CHECK(turan_minus(10, 3).size() == 31);
    CHECK(turan_minus(5, 2).size() == 5);
    CHECK(isomorphic(turan_minus(5, 2), from_graph6("DIk")));

    const Graph kt = kite(10, 4);
    CHECK(kt.order() == 8);
    CHECK(kt.size() == 10);
    CHECK(kt.degree(0) == 3);
    CHECK(kt.degree(kt.order() - 1) == 1);
    CHECK_THROWS_AS(kite(6, 4), std::invalid_argument);

    const Graph s5 = star(5);
    CHECK(s5.size() == 4);
    CHECK(s5.degree(0) == 4);

    CHECK(complete_multipartite(PartitionSpec({2, 2, 2})).size() == 12);
    CHECK_THROWS_AS(PartitionSpec({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec({2, 0}), std::invalid_argument);
}

TEST_CASE("gregory gadget layering") {
    // n = 7, k = 3: clique layer of 2, then independent layers 2, 2, 1
    const Graph g = gregory_gadget(7, 3);
    CHECK(g.order() == 7);
    CHECK(g.size() == 1 + 4 + 4 + 2);
    const auto layers = gregory_layers(7, 3);
    REQUIRE(layers.size() == 4);
    CHECK(layers[0] == std::vector<int>{0, 1});
    CHECK(layers[3] == std::vector<int>{6});

    const Graph h = gregory_gadget(6, 3);
    CHECK(h.order() == 6);
    CHECK(h.size() == 1 + 4 + 4);

    CHECK_THROWS_AS(gregory_gadget(3, 3), std::invalid_argument);
}

TEST_CASE("canonical forms identify isomorphs") {
    const Graph a = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const Graph b = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_graph6(a) == canonical_graph6(b));
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, star(5)));
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(graph_from_code(5, canonical_code(a)) == canonical_form(a));
}
