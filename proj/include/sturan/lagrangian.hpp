#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sturan/cliques.hpp"
#include "sturan/graph.hpp"

namespace sturan {

// A point of the standard simplex with its strictly-positive support.
// Entries below 1e-14 are zeroed and the rest renormalized on construction.
struct SimplexVector {
    Eigen::VectorXd entries;
    std::vector<int> support;
};

SimplexVector make_simplex(Eigen::VectorXd v);
SimplexVector uniform_simplex(int n);
SimplexVector uniform_on(int n, const std::vector<int>& verts);

// W_ij = c(ij)/(c(ij)-1) on edges, 0 elsewhere.
Eigen::MatrixXd weight_matrix(const Graph& g, const EdgeCliqueProfile& p);

// z^T A z = 2 sum_{ij in E} z_i z_j
double lagrangian_value(const Graph& g, const SimplexVector& z);

// x^T W x with clique-order weights
double weighted_value(const Graph& g, const EdgeCliqueProfile& p, const SimplexVector& x);

struct OptimizeResult {
    double value = 0.0;
    SimplexVector point;
};

// Maximize z^T A z over the simplex; the maximum is 1 - 1/omega(G).
OptimizeResult maximize_lagrangian(const Graph& g, double tol = 1e-10,
                                   long long iter_cap = 1'000'000);

// Maximize x^T W x over the simplex; the maximum is 1 whenever G has an edge.
OptimizeResult maximize_weighted(const Graph& g, const EdgeCliqueProfile& p, double tol = 1e-10,
                                 long long iter_cap = 1'000'000);

// Move all mass of j onto a nonadjacent i with at least j's gradient:
// y = x + x_j (e_i - e_j). Objective never decreases, support shrinks.
SimplexVector support_shift_nonadjacent(const Graph& g, const Eigen::MatrixXd& w,
                                        const SimplexVector& x, int i, int j);

// Move eps of mass from j to i when i's gradient is strictly larger:
// y = x + eps (e_i - e_j). Returns x unchanged when gradients are balanced.
SimplexVector gradient_balance_shift(const Graph& g, const Eigen::MatrixXd& w,
                                     const SimplexVector& x, int i, int j, double eps);

// True iff the support induces (isolated vertices stripped) a complete
// multipartite graph with exactly omega(G) parts.
bool verify_equality_support(const Graph& g, const SimplexVector& x, const EdgeCliqueProfile& p);

}  // namespace sturan
