#include "sturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace sturan {

namespace {

constexpr int kDenseLimit = 512;

// splitmix64, used only to seed power-iteration start vectors deterministically.
double hash_unit(std::uint64_t i) {
    std::uint64_t z = (i + 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return 0.5 + static_cast<double>(z >> 11) / static_cast<double>(1ull << 53);
}

struct PowerResult {
    double value = 0.0;
    Eigen::VectorXd vec;
    double residual = 0.0;
};

// Dominant eigenpair of a symmetric operator given by matvec, with Rayleigh
// estimates. Converges on the residual ||Mx - mu x||_inf <= tol.
template <class MatVec>
PowerResult power_dominant(int dim, const MatVec& mv, const Eigen::VectorXd& start,
                           const EigenOptions& opt) {
    Eigen::VectorXd x = start.normalized();
    Eigen::VectorXd y(dim);
    double best_residual = std::numeric_limits<double>::infinity();
    for (long long it = 0; it < opt.iter_cap; ++it) {
        mv(x, y);
        const double mu = x.dot(y);
        const double residual = (y - mu * x).lpNorm<Eigen::Infinity>();
        best_residual = std::min(best_residual, residual);
        if (residual <= opt.tol) return {mu, x, residual};
        const double nrm = y.norm();
        if (nrm == 0.0) return {0.0, x, 0.0};  // x in the kernel: eigenvector found
        x = y / nrm;
    }
    throw convergence_error("power iteration did not converge", best_residual);
}

struct ComponentSpectrum {
    double l1 = 0.0, ln = 0.0, q = 0.0;
    Eigen::VectorXd v1;
    double residual = 0.0;
};

Eigen::MatrixXd submatrix_adjacency(const Graph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]))
                a(i, j) = a(j, i) = 1.0;
    return a;
}

void fix_sign_and_clamp(Eigen::VectorXd& v) {
    int imax = 0;
    for (int i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0) v = -v;
    for (int i = 0; i < v.size(); ++i)
        if (v[i] < 0) v[i] = 0.0;
    v.normalize();
}

ComponentSpectrum component_spectrum(const Graph& g, const std::vector<int>& verts,
                                     const EigenOptions& opt, bool need_ln, bool need_q) {
    const int k = static_cast<int>(verts.size());
    ComponentSpectrum out;
    if (k == 1) {
        out.v1 = Eigen::VectorXd::Ones(1);
        return out;
    }

    if (k <= kDenseLimit) {
        const Eigen::MatrixXd a = submatrix_adjacency(g, verts);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        out.l1 = es.eigenvalues()(k - 1);
        out.ln = es.eigenvalues()(0);
        out.v1 = es.eigenvectors().col(k - 1);
        fix_sign_and_clamp(out.v1);
        out.residual = (a * out.v1 - out.l1 * out.v1).lpNorm<Eigen::Infinity>();
        if (need_q) {
            Eigen::MatrixXd qm = a;
            for (int i = 0; i < k; ++i) qm(i, i) = a.row(i).sum();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esq(qm);
            out.q = esq.eigenvalues()(k - 1);
        }
        return out;
    }

    // Large component: shifted power iterations on bit rows.
    std::vector<int> local(static_cast<size_t>(g.order()), -1);
    for (int i = 0; i < k; ++i) local[static_cast<size_t>(verts[static_cast<size_t>(i)])] = i;
    auto adj_mv = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        for (int i = 0; i < k; ++i) {
            double s = 0.0;
            g.neighbors(verts[static_cast<size_t>(i)]).for_each([&](int u) {
                s += x[local[static_cast<size_t>(u)]];
            });
            y[i] = s;
        }
    };

    // A + I keeps the iteration aimed at the Perron eigenvalue.
    auto shifted = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        adj_mv(x, y);
        y += x;
    };
    PowerResult top = power_dominant(k, shifted, Eigen::VectorXd::Ones(k), opt);
    out.l1 = top.value - 1.0;
    out.v1 = top.vec;
    fix_sign_and_clamp(out.v1);
    out.residual = top.residual;

    if (need_ln) {
        // Dominant of (l1+1)I - A is l1+1-ln. Pseudo-random start avoids
        // landing orthogonal to the target eigenspace.
        const double shift = out.l1 + 1.0;
        auto flipped = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
            adj_mv(x, y);
            y = shift * x - y;
        };
        Eigen::VectorXd start(k);
        for (int i = 0; i < k; ++i) start[i] = hash_unit(static_cast<std::uint64_t>(i));
        PowerResult bottom = power_dominant(k, flipped, start, opt);
        out.ln = shift - bottom.value;
        out.residual = std::max(out.residual, bottom.residual);
    }
    if (need_q) {
        std::vector<double> deg(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            deg[static_cast<size_t>(i)] = g.degree(verts[static_cast<size_t>(i)]);
        auto q_mv = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
            adj_mv(x, y);
            for (int i = 0; i < k; ++i) y[i] += deg[static_cast<size_t>(i)] * x[i];
        };
        PowerResult qr = power_dominant(k, q_mv, Eigen::VectorXd::Ones(k), opt);
        out.q = qr.value;
        out.residual = std::max(out.residual, qr.residual);
    }
    return out;
}

// Relative tie tolerance when picking the dominant component.
bool strictly_larger(double a, double b) {
    return a > b + 1e-12 * std::max(1.0, std::abs(b));
}

struct FullSpectrum {
    double l1 = 0.0, ln = 0.0, q = 0.0, residual = 0.0;
    Eigen::VectorXd perron;
};

FullSpectrum solve(const Graph& g, const EigenOptions& opt, bool need_ln, bool need_q) {
    FullSpectrum out;
    out.perron = Eigen::VectorXd::Zero(g.order());
    if (g.order() == 0) return out;

    const auto comps = connected_components(g);
    bool first = true;
    int dominant = -1;
    std::vector<ComponentSpectrum> spectra;
    spectra.reserve(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) {
        ComponentSpectrum cs = component_spectrum(g, comps[c], opt, need_ln, need_q);
        out.residual = std::max(out.residual, cs.residual);
        if (first || strictly_larger(cs.l1, spectra[static_cast<size_t>(dominant)].l1)) {
            dominant = static_cast<int>(c);
            first = false;
        }
        out.ln = (c == 0) ? cs.ln : std::min(out.ln, cs.ln);
        out.q = (c == 0) ? cs.q : std::max(out.q, cs.q);
        spectra.push_back(std::move(cs));
    }
    const auto& dom = spectra[static_cast<size_t>(dominant)];
    out.l1 = dom.l1;
    const auto& verts = comps[static_cast<size_t>(dominant)];
    for (size_t i = 0; i < verts.size(); ++i)
        out.perron[verts[i]] = dom.v1[static_cast<Eigen::Index>(i)];
    return out;
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    return a;
}

Eigen::MatrixXd signless_laplacian_matrix(const Graph& g) {
    Eigen::MatrixXd q = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) q(v, v) = g.degree(v);
    return q;
}

std::pair<double, Eigen::VectorXd> spectral_radius(const Graph& g, const EigenOptions& opt) {
    if (g.order() < 1) throw std::invalid_argument("spectral_radius needs n >= 1");
    FullSpectrum s = solve(g, opt, false, false);
    return {s.l1, std::move(s.perron)};
}

std::pair<double, double> extreme_eigenvalues(const Graph& g, const EigenOptions& opt) {
    if (g.order() < 1) throw std::invalid_argument("extreme_eigenvalues needs n >= 1");
    FullSpectrum s = solve(g, opt, true, false);
    return {s.l1, s.ln};
}

double signless_laplacian_radius(const Graph& g, const EigenOptions& opt) {
    if (g.order() < 1) throw std::invalid_argument("signless_laplacian_radius needs n >= 1");
    return solve(g, opt, false, true).q;
}

double rayleigh_quotient(const Graph& g, const Eigen::VectorXd& v) {
    if (v.size() != g.order()) throw std::invalid_argument("vector length must equal graph order");
    const double nrm2 = v.squaredNorm();
    if (nrm2 == 0.0) throw std::invalid_argument("rayleigh quotient of the zero vector");
    double quad = 0.0;
    for (int u = 0; u < g.order(); ++u) {
        double s = 0.0;
        g.neighbors(u).for_each([&](int w) { s += v[w]; });
        quad += v[u] * s;
    }
    return quad / nrm2;
}

SpectrumSummary spectrum_summary(const Graph& g, const EigenOptions& opt) {
    FullSpectrum s = solve(g, opt, true, true);
    SpectrumSummary out;
    out.lambda1 = s.l1;
    out.lambdan = s.ln;
    out.q = s.q;
    out.tol = std::max(s.residual, opt.tol);
    out.perron = std::move(s.perron);
    return out;
}

}  // namespace sturan
