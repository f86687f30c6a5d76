#include "sturan/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sturan/spectral.hpp"

namespace sturan {

namespace {

constexpr double kSupportThreshold = 1e-14;

void check_dim(const Graph& g, const SimplexVector& x) {
    if (x.entries.size() != g.order())
        throw std::invalid_argument("simplex vector length must equal graph order");
}

void check_profile(const Graph& g, const EdgeCliqueProfile& p) {
    if (static_cast<long long>(p.edge_orders.size()) != g.size())
        throw std::invalid_argument("profile does not match graph");
}

// Weighted adjacency lists: the optimizer's working form of W.
struct WeightedLists {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> nbr;

    double quad(const Eigen::VectorXd& x) const {
        double s = 0.0;
        for (int u = 0; u < n; ++u)
            for (auto [v, w] : nbr[static_cast<size_t>(u)]) s += w * x[u] * x[v];
        return s;  // each edge visited twice, which is exactly x^T W x
    }

    double grad(const Eigen::VectorXd& x, int i) const {  // (Wx)_i
        double s = 0.0;
        for (auto [v, w] : nbr[static_cast<size_t>(i)]) s += w * x[v];
        return s;
    }
};

WeightedLists unit_lists(const Graph& g) {
    WeightedLists wl;
    wl.n = g.order();
    wl.nbr.resize(static_cast<size_t>(wl.n));
    for (auto [u, v] : g.edges()) {
        wl.nbr[static_cast<size_t>(u)].emplace_back(v, 1.0);
        wl.nbr[static_cast<size_t>(v)].emplace_back(u, 1.0);
    }
    return wl;
}

WeightedLists clique_weight_lists(const Graph& g, const EdgeCliqueProfile& p) {
    WeightedLists wl;
    wl.n = g.order();
    wl.nbr.resize(static_cast<size_t>(wl.n));
    for (const auto& e : p.edge_orders) {
        const double w = static_cast<double>(e.c) / (e.c - 1);
        wl.nbr[static_cast<size_t>(e.u)].emplace_back(e.v, w);
        wl.nbr[static_cast<size_t>(e.v)].emplace_back(e.u, w);
    }
    return wl;
}

// One hill-climbing run: replicator steps, then support shifts onto
// higher-gradient nonadjacent vertices, then pairwise gradient balancing.
SimplexVector climb(const Graph& g, const WeightedLists& wl, SimplexVector x, double tol,
                    long long& budget) {
    const double step_tol = std::max(tol * 1e-2, 1e-15);
    for (int round = 0; round < 64; ++round) {
        // replicator: x_i <- x_i (Wx)_i / (x^T W x)
        for (int it = 0; it < 512; ++it) {
            if (--budget < 0) throw convergence_error("optimizer iteration cap exceeded", 0.0);
            const double q = wl.quad(x.entries);
            if (q <= 0.0) break;
            Eigen::VectorXd next = x.entries;
            double delta = 0.0;
            for (int v : x.support) {
                next[v] = x.entries[v] * wl.grad(x.entries, v) / q;
                delta = std::max(delta, std::abs(next[v] - x.entries[v]));
            }
            x = make_simplex(std::move(next));
            if (delta <= step_tol) break;
        }

        // support shift sweep, lowest-index pair first
        bool shifted = false;
        for (size_t a = 0; a < x.support.size() && !shifted; ++a) {
            for (size_t b = 0; b < x.support.size() && !shifted; ++b) {
                if (a == b) continue;
                const int i = x.support[a], j = x.support[b];
                if (g.has_edge(i, j)) continue;
                if (wl.grad(x.entries, i) >= wl.grad(x.entries, j)) {
                    Eigen::VectorXd next = x.entries;
                    next[i] += next[j];
                    next[j] = 0.0;
                    x = make_simplex(std::move(next));
                    shifted = true;
                }
            }
        }
        if (shifted) continue;

        // gradient balancing within the support
        bool balanced = true;
        for (size_t a = 0; a < x.support.size(); ++a)
            for (size_t b = 0; b < x.support.size(); ++b) {
                const int i = x.support[a], j = x.support[b];
                if (i == j) continue;
                const double di = wl.grad(x.entries, i) - wl.grad(x.entries, j);
                if (di <= 1e-10) continue;
                double wij = 0.0;
                for (auto [v, w] : wl.nbr[static_cast<size_t>(i)])
                    if (v == j) wij = w;
                const double cap = 0.5 * std::min(x.entries[i], x.entries[j]);
                const double eps = wij > 0.0 ? std::min(di / (2.0 * wij), cap) : cap;
                if (eps <= 0.0) continue;
                Eigen::VectorXd next = x.entries;
                next[i] += eps;
                next[j] -= eps;
                x = make_simplex(std::move(next));
                balanced = false;
            }
        if (balanced) return x;
    }
    return x;
}

OptimizeResult optimize(const Graph& g, const WeightedLists& wl,
                        const std::vector<std::vector<int>>& clique_starts, double tol,
                        long long iter_cap) {
    if (g.order() < 1) throw std::invalid_argument("optimizer needs n >= 1");

    std::vector<SimplexVector> starts;
    starts.push_back(uniform_simplex(g.order()));
    std::size_t target = 1;
    for (const auto& clq : clique_starts)
        if (!clq.empty()) {
            starts.push_back(uniform_on(g.order(), clq));
            target = std::max(target, clq.size());
        }

    std::vector<OptimizeResult> runs;
    for (const auto& s : starts) {
        long long budget = iter_cap;
        SimplexVector x = climb(g, wl, s, tol, budget);
        const double v = wl.quad(x.entries);
        runs.push_back({v, std::move(x)});
    }

    double top = runs[0].value;
    for (const auto& r : runs) top = std::max(top, r.value);

    // Values within 1e-9 of the top are one mathematical optimum up to float
    // noise. Among them prefer a support of the top clique size (that point
    // realizes the equality structure), then the lexicographically smallest
    // support, so output is independent of restart order.
    const OptimizeResult* pick = nullptr;
    for (const auto& r : runs) {
        if (r.value < top - 1e-9) continue;
        if (!pick) {
            pick = &r;
            continue;
        }
        const bool r_hits = r.point.support.size() == target;
        const bool p_hits = pick->point.support.size() == target;
        if (r_hits != p_hits) {
            if (r_hits) pick = &r;
            continue;
        }
        if (r.point.support < pick->point.support) pick = &r;
    }
    return *pick;
}

}  // namespace

SimplexVector make_simplex(Eigen::VectorXd v) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) {
            if (v[i] < -1e-12) throw std::invalid_argument("negative simplex entry");
            v[i] = 0.0;
        }
        sum += v[i];
    }
    if (sum <= 0.0) throw std::invalid_argument("simplex vector must have positive mass");
    v /= sum;
    SimplexVector out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] <= kSupportThreshold) v[i] = 0.0;
    const double kept = v.sum();
    if (kept <= 0.0) throw std::invalid_argument("simplex vector must have positive mass");
    v /= kept;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] > 0.0) out.support.push_back(static_cast<int>(i));
    out.entries = std::move(v);
    return out;
}

SimplexVector uniform_simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex needs n >= 1");
    return make_simplex(Eigen::VectorXd::Constant(n, 1.0 / n));
}

SimplexVector uniform_on(int n, const std::vector<int>& verts) {
    if (verts.empty()) throw std::invalid_argument("empty support");
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int u : verts) v[u] = 1.0 / static_cast<double>(verts.size());
    return make_simplex(std::move(v));
}

Eigen::MatrixXd weight_matrix(const Graph& g, const EdgeCliqueProfile& p) {
    check_profile(g, p);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(g.order(), g.order());
    for (const auto& e : p.edge_orders)
        w(e.u, e.v) = w(e.v, e.u) = static_cast<double>(e.c) / (e.c - 1);
    return w;
}

double lagrangian_value(const Graph& g, const SimplexVector& z) {
    check_dim(g, z);
    return unit_lists(g).quad(z.entries);
}

double weighted_value(const Graph& g, const EdgeCliqueProfile& p, const SimplexVector& x) {
    check_dim(g, x);
    check_profile(g, p);
    return clique_weight_lists(g, p).quad(x.entries);
}

OptimizeResult maximize_lagrangian(const Graph& g, double tol, long long iter_cap) {
    return optimize(g, unit_lists(g), {maximum_clique(g)}, tol, iter_cap);
}

OptimizeResult maximize_weighted(const Graph& g, const EdgeCliqueProfile& p, double tol,
                                 long long iter_cap) {
    check_profile(g, p);
    return optimize(g, clique_weight_lists(g, p), p.cliques, tol, iter_cap);
}

SimplexVector support_shift_nonadjacent(const Graph& g, const Eigen::MatrixXd& w,
                                        const SimplexVector& x, int i, int j) {
    check_dim(g, x);
    if (i < 0 || j < 0 || i >= g.order() || j >= g.order() || i == j)
        throw std::invalid_argument("bad vertex pair");
    if (g.has_edge(i, j)) throw std::invalid_argument("vertices must be nonadjacent");
    if (!(x.entries[i] > 0.0 && x.entries[j] > 0.0))
        throw std::invalid_argument("both vertices must carry mass");
    const double gi = w.row(i).dot(x.entries), gj = w.row(j).dot(x.entries);
    if (gi < gj) throw std::invalid_argument("target gradient must be at least source gradient");
    Eigen::VectorXd next = x.entries;
    next[i] += next[j];
    next[j] = 0.0;
    return make_simplex(std::move(next));
}

SimplexVector gradient_balance_shift(const Graph& g, const Eigen::MatrixXd& w,
                                     const SimplexVector& x, int i, int j, double eps) {
    check_dim(g, x);
    if (i < 0 || j < 0 || i >= g.order() || j >= g.order() || i == j)
        throw std::invalid_argument("bad vertex pair");
    if (!(x.entries[i] > 0.0 && x.entries[j] > 0.0))
        throw std::invalid_argument("both vertices must be in the support");
    const double gi = w.row(i).dot(x.entries), gj = w.row(j).dot(x.entries);
    if (gi == gj) return x;
    if (gi < gj) throw std::invalid_argument("gradient at i must not be smaller");
    if (!(eps > 0.0 && eps < std::min(x.entries[i], x.entries[j])))
        throw std::invalid_argument("eps must lie in (0, min(x_i, x_j))");
    Eigen::VectorXd next = x.entries;
    next[i] += eps;
    next[j] -= eps;
    return make_simplex(std::move(next));
}

bool verify_equality_support(const Graph& g, const SimplexVector& x, const EdgeCliqueProfile& p) {
    check_dim(g, x);
    check_profile(g, p);
    if (x.support.empty()) return false;
    const Graph sub = induced_subgraph(g, x.support);
    const auto parts = complete_multipartite_parts(sub);
    return parts && parts->count() == std::max(p.omega, 1);
}

}  // namespace sturan
