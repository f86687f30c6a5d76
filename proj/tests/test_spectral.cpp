#include <doctest.h>

#include <cmath>
#include <vector>

#include "sturan/enumerate.hpp"
#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/spectral.hpp"
#include "support/jacobi_ref.hpp"

using namespace sturan;

namespace {

jacobi_ref::Matrix dense_adjacency(const Graph& g) {
    jacobi_ref::Matrix a(g.order(), std::vector<double>(g.order(), 0.0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
    return a;
}

jacobi_ref::Matrix dense_signless(const Graph& g) {
    jacobi_ref::Matrix a = dense_adjacency(g);
    for (int v = 0; v < g.order(); ++v) a[v][v] = g.degree(v);
    return a;
}

}  // namespace

TEST_CASE("extreme eigenvalues agree with the Jacobi oracle through n = 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto ref = jacobi_ref::eigenvalues(dense_adjacency(g));
            const auto [lo, hi] = std::pair{ref.front(), ref.back()};
            const auto [l1, ln] = extreme_eigenvalues(g);
            CHECK(l1 == doctest::Approx(hi).epsilon(1e-9));
            CHECK(ln == doctest::Approx(lo).epsilon(1e-9));

            const auto refq = jacobi_ref::eigenvalues(dense_signless(g));
            CHECK(signless_laplacian_radius(g) == doctest::Approx(refq.back()).epsilon(1e-9));
        }
    }
}

TEST_CASE("jacobi oracle spot checks at n = 7") {
    const auto& all = enumerate_graphs(7);
    for (size_t i = 0; i < all.size(); i += 29) {
        const Graph& g = all[i];
        const auto ref = jacobi_ref::eigenvalues(dense_adjacency(g));
        const auto [l1, ln] = extreme_eigenvalues(g);
        CHECK(l1 == doctest::Approx(ref.back()).epsilon(1e-9));
        CHECK(ln == doctest::Approx(ref.front()).epsilon(1e-9));
    }
}

TEST_CASE("closed-form spectra") {
    for (int n = 2; n <= 8; ++n) {
        const auto [l1, ln] = extreme_eigenvalues(complete_graph(n));
        CHECK(l1 == doctest::Approx(n - 1.0).epsilon(1e-10));
        CHECK(ln == doctest::Approx(-1.0).epsilon(1e-10));
    }
    for (auto [a, b] : {std::pair{2, 3}, {3, 3}, {4, 7}, {1, 9}}) {
        const auto [l1, ln] = extreme_eigenvalues(complete_multipartite(PartitionSpec(
            a >= b ? std::vector<int>{a, b} : std::vector<int>{b, a})));
        CHECK(l1 == doctest::Approx(std::sqrt(1.0 * a * b)).epsilon(1e-10));
        CHECK(ln == doctest::Approx(-std::sqrt(1.0 * a * b)).epsilon(1e-10));
    }

    const auto [p4, p4n] = extreme_eigenvalues(path_graph(4));
    CHECK(p4 == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));
    CHECK(p4n == doctest::Approx(-(1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));

    const auto [c5, c5n] = extreme_eigenvalues(cycle_graph(5));
    CHECK(c5 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(c5n == doctest::Approx(2.0 * std::cos(4.0 * std::acos(-1.0) / 5.0)).epsilon(1e-9));

    // q(K_n) = 2n - 2, q(star_n) = n
    CHECK(signless_laplacian_radius(complete_graph(6)) == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(signless_laplacian_radius(star(10)) == doctest::Approx(10.0).epsilon(1e-8));
    CHECK(signless_laplacian_radius(star(50)) == doctest::Approx(50.0).epsilon(1e-8));
}

TEST_CASE("perron vector properties") {
    const Graph g = kite(12, 4);
    const auto s = spectrum_summary(g);
    CHECK(s.perron.size() == g.order());
    CHECK(s.perron.norm() == doctest::Approx(1.0).epsilon(1e-10));
    for (int v = 0; v < g.order(); ++v) CHECK(s.perron[v] >= -1e-12);
    CHECK(rayleigh_quotient(g, s.perron) == doctest::Approx(s.lambda1).epsilon(1e-9));

    const auto [lam, vec] = spectral_radius(g);
    CHECK(lam == doctest::Approx(s.lambda1).epsilon(1e-10));
    CHECK(rayleigh_quotient(g, vec) == doctest::Approx(lam).epsilon(1e-9));
}

TEST_CASE("perron vector sits on the dominant component") {
    // K_4 on {0..3} next to K_2 on {4,5}
    Graph g(6);
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j) g.add_edge(j, i);
    g.add_edge(4, 5);
    const auto s = spectrum_summary(g);
    CHECK(s.lambda1 == doctest::Approx(3.0).epsilon(1e-10));
    for (int v = 0; v < 4; ++v) CHECK(s.perron[v] > 0.1);
    CHECK(s.perron[4] == 0.0);
    CHECK(s.perron[5] == 0.0);

    // equal radii: ties break to the lowest-vertex component
    Graph h(6);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    h.add_edge(4, 5);
    const auto sh = spectrum_summary(h);
    CHECK(sh.lambda1 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sh.perron[0] > 0.1);
    CHECK(sh.perron[2] == 0.0);
    CHECK(sh.perron[4] == 0.0);
}

TEST_CASE("bipartite spectra are symmetric") {
    for (const Graph& g : {path_graph(7), star(9), turan_graph(9, 2), cycle_graph(6)}) {
        const auto [l1, ln] = extreme_eigenvalues(g);
        CHECK(l1 + ln == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("degenerate orders") {
    const auto s1 = spectrum_summary(Graph(1));
    CHECK(s1.lambda1 == 0.0);
    CHECK(s1.q == 0.0);
    const auto s0 = spectrum_summary(Graph(0));
    CHECK(s0.lambda1 == 0.0);
    CHECK(s0.perron.size() == 0);
}
