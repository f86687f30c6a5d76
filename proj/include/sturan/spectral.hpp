#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>

#include "sturan/graph.hpp"

namespace sturan {

// Power iteration ran out of budget; carries the best residual reached.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best_residual)
        : std::runtime_error(what + " (best residual " + std::to_string(best_residual) + ")"),
          best_residual_(best_residual) {}

    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

struct EigenOptions {
    double tol = 1e-10;
    long long iter_cap = 1'000'000;
};

struct SpectrumSummary {
    double lambda1 = 0.0;
    double lambdan = 0.0;
    double q = 0.0;
    double tol = 0.0;           // achieved residual bound
    Eigen::VectorXd perron;     // unit norm, nonnegative, zero off the dominant component
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd signless_laplacian_matrix(const Graph& g);

// Largest adjacency eigenvalue and its unit eigenvector. On disconnected
// graphs the vector lives on the component of largest radius (ties broken by
// lowest vertex index) and is zero elsewhere.
std::pair<double, Eigen::VectorXd> spectral_radius(const Graph& g, const EigenOptions& opt = {});

std::pair<double, double> extreme_eigenvalues(const Graph& g, const EigenOptions& opt = {});

double signless_laplacian_radius(const Graph& g, const EigenOptions& opt = {});

double rayleigh_quotient(const Graph& g, const Eigen::VectorXd& v);

SpectrumSummary spectrum_summary(const Graph& g, const EigenOptions& opt = {});

}  // namespace sturan
