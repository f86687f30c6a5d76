#include "sturan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sturan/canonical.hpp"
#include "sturan/cliques.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/graph6.hpp"
#include "sturan/lagrangian.hpp"
#include "sturan/parallel.hpp"
#include "sturan/rational.hpp"

namespace sturan {

namespace {

bool all_parts_equal(const PartitionSpec& parts) {
    for (int p : parts.parts)
        if (p != parts.parts.front()) return false;
    return true;
}

bool induces_clique(const Graph& g, const std::vector<int>& verts) {
    const Graph sub = induced_subgraph(g, verts);
    const long long s = sub.order();
    return sub.size() == s * (s - 1) / 2;
}

std::string bool_cell(bool b) { return b ? "1" : "0"; }

}  // namespace

const char* equality_class_name(EqualityClass c) {
    switch (c) {
        case EqualityClass::complete_bipartite:
            return "complete-bipartite";
        case EqualityClass::complete_regular_multipartite:
            return "complete-regular-multipartite";
        default:
            return "none";
    }
}

VerificationReport check_local_theorem(const Graph& g, const EigenOptions& opt) {
    VerificationReport rep;
    rep.graph6 = to_graph6(g);
    rep.ledger = bound_ledger(g, opt);
    if (rep.ledger.omega < 2) return rep;

    if (rep.ledger.slack_local < -1e-9)
        rep.violations.push_back("lambda exceeds the clique-order bound");

    const bool numeric_equality =
        rep.ledger.slack_local < 1e-7 * std::max(1.0, rep.ledger.local);

    EqualityClass cls = EqualityClass::none;
    if (auto parts = complete_multipartite_parts(g); parts && parts->count() == rep.ledger.omega) {
        if (rep.ledger.omega == 2)
            cls = EqualityClass::complete_bipartite;
        else if (all_parts_equal(*parts))
            cls = EqualityClass::complete_regular_multipartite;
    }

    const bool structural = cls != EqualityClass::none;
    if (numeric_equality && !structural)
        rep.violations.push_back("numeric equality without the equality structure");
    if (structural && !numeric_equality)
        rep.violations.push_back("equality structure with slack above threshold");
    if (numeric_equality && structural) rep.equality = cls;
    return rep;
}

bool check_brouwer(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("partite check needs r >= 2");
    const int n = g.order();
    if (n < 2 * r + 1) throw std::invalid_argument("partite check needs n >= 2r+1");
    if (clique_number(g) > r) throw std::invalid_argument("graph must have no (r+1)-clique");
    const long long threshold = turan_edge_count(n, r) - n / r + 2;
    if (g.size() < threshold) return true;
    return chromatic_number(g) <= r;
}

bool check_mubayi(const PartitionSpec& parts, long long s) {
    const long long n = parts.total();
    if (s < 0 || s >= n) throw std::invalid_argument("slack must satisfy 0 <= s < n");
    const int r = parts.count();
    long long squares = 0;
    for (int p : parts.parts) squares += 1LL * p * p;
    const long long cross = (n * n - squares) / 2;
    if (cross < turan_edge_count(static_cast<int>(n), r) - s) return true;
    const long long lo = n / r - s;
    const long long hi = (n + r - 1) / r + s;
    for (int p : parts.parts)
        if (p < lo || p > hi) return false;
    return true;
}

SpexCcReport spex_cc_search(int n, int r, const EigenOptions& opt, int jobs) {
    if (n < 1 || n > 9) throw std::invalid_argument("exhaustive search needs 1 <= n <= 9");
    if (r < 1) throw std::invalid_argument("clique bound must be at least 1");

    const auto& pool = enumerate_clique_free(n, r);
    struct Slot {
        bool keep = false;
        double lambda = 0.0;
    };
    std::vector<Slot> slots(pool.size());
    parallel_for(static_cast<long long>(pool.size()), jobs, [&](long long i) {
        const Graph& g = pool[static_cast<std::size_t>(i)];
        if (!is_connected(complement(g))) return;
        slots[static_cast<std::size_t>(i)].keep = true;
        slots[static_cast<std::size_t>(i)].lambda = spectral_radius(g, opt).first;
    });

    SpexCcReport rep;
    rep.n = n;
    rep.r = r;
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!slots[i].keep) continue;
        ++rep.candidates;
        if (best == pool.size() || slots[i].lambda > slots[best].lambda + 1e-9) best = i;
    }
    if (best == pool.size()) throw std::runtime_error("no co-connected candidate at this order");
    rep.best_graph6 = to_graph6(pool[best]);
    rep.best_lambda = slots[best].lambda;

    if (r >= 2 && r <= n - 1) {
        const Graph tm = canonical_form(turan_minus(n, r));
        rep.turan_minus_graph6 = to_graph6(tm);
        rep.turan_minus_lambda = spectral_radius(tm, opt).first;
        rep.matches_turan_minus = rep.best_graph6 == *rep.turan_minus_graph6;
    }
    return rep;
}

TuranMinusReport turan_minus_claims(int n, int r, const EigenOptions& opt) {
    if (r < 2 || r > n - 1) throw std::invalid_argument("needs 2 <= r <= n-1");
    if (n > 600) throw std::invalid_argument("order capped at 600");

    TuranMinusReport rep;
    rep.n = n;
    rep.r = r;
    const Graph full = turan_graph(n, r);
    const Graph pruned = turan_minus(n, r);
    rep.turan_edges = full.size();
    rep.minus_edges = pruned.size();
    rep.lambda_turan = spectral_radius(full, opt).first;
    rep.lambda_minus = spectral_radius(pruned, opt).first;
    rep.claim_margin = rep.lambda_minus - (rep.lambda_turan - 2.0 * r / n);
    rep.edge_identity = rep.minus_edges == rep.turan_edges - (r - 1);
    rep.edge_floor = 8 * (rep.turan_edges - rep.minus_edges) <= 17LL * r;
    rep.lambda_close = rep.claim_margin > -1e-8;
    rep.co_connected = is_connected(complement(pruned));
    return rep;
}

GregoryRecord gregory_experiment(int n, int k, const EigenOptions& opt) {
    if (k < 2) throw std::invalid_argument("chromatic target must be at least 2");
    if (n < 2 * (k - 1)) throw std::invalid_argument("order must be at least 2(k-1)");
    if (n > 600) throw std::invalid_argument("order capped at 600");

    GregoryRecord rec;
    rec.n = n;
    rec.k = k;
    rec.t = n / (k - 1);
    rec.s = n % (k - 1);

    const Graph g = gregory_gadget(n, k);
    const auto [lambda, x] = spectral_radius(g, opt);
    rec.lambda = lambda;

    const auto layers = gregory_layers(n, k);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int v : layers.front()) {
        lo = std::min(lo, x[v]);
        hi = std::max(hi, x[v]);
    }
    if (hi - lo > 1e-10)
        throw std::runtime_error("clique-layer Perron components differ beyond 1e-10");
    rec.x0 = x[layers.front().front()];

    double sum_s = 0.0;
    for (std::size_t li = 1; li < layers.size(); li += 2)
        for (int v : layers[li]) sum_s += x[v] * x[v];
    rec.sum_S = sum_s;

    const double a = k - 1.0;
    rec.identity_rhs = 0.5 - (a * (a - 1.0) / 2.0) * rec.x0 * rec.x0 / lambda;
    rec.identity_err = std::abs(rec.sum_S - rec.identity_rhs);
    if (rec.identity_err > 1e-10)
        throw std::runtime_error("odd-layer mass identity drifts beyond 1e-10");

    rec.conj_rhs = gregory_rhs(n, k);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    rec.claim8_margin = a * a * a * pi2 / (static_cast<double>(n) * n) - (2.0 * a - lambda);
    rec.claim9_margin = a * a * pi2 / std::pow(static_cast<double>(n), 1.5) - rec.x0;
    if (rec.claim8_margin < 0.0)
        throw std::runtime_error("spectral-gap margin negative");
    if (rec.claim9_margin < 0.0)
        throw std::runtime_error("clique-layer component margin negative");

    rec.violates_conjecture = rec.sum_S > rec.conj_rhs;
    rec.gap_scaled = (0.5 - rec.sum_S) * std::pow(static_cast<double>(n), 3) /
                     std::pow(static_cast<double>(k), 5);
    return rec;
}

std::vector<KiteGapRow> kite_gap_scan(int w, const std::vector<long long>& ms) {
    if (w < 3) throw std::invalid_argument("clique order must be at least 3");
    const long long clique_edges = 1LL * w * (w - 1) / 2;
    const long long tail_orders = 1LL * (w - 1) * (w - 2) / 2;

    std::vector<KiteGapRow> rows;
    rows.reserve(ms.size());
    for (long long m : ms) {
        if (m <= w * tail_orders)
            throw std::invalid_argument("edge count too small for this clique order");
        KiteGapRow row;
        row.m = m;
        row.w = w;
        row.nikiforov = nikiforov_bound(m, w);
        row.local = std::sqrt(static_cast<double>(m + tail_orders));
        row.gap = row.nikiforov - row.local;
        row.gap_over_sqrt_m = row.gap / std::sqrt(static_cast<double>(m));

        const long long order = w + (m - clique_edges);
        if (order <= kMaxVertices) {
            const Graph g = kite(m, w);
            const auto profile = edge_clique_orders(g);
            if (!(local_radicand(profile) == Fraction(m + tail_orders)))
                throw std::runtime_error("clique-order sum disagrees with closed form");
            const double via_profile = local_turan_bound(profile);
            if (std::abs(via_profile - row.local) > 1e-9 * std::max(1.0, row.local))
                throw std::runtime_error("profile bound disagrees with closed form");
            row.identity_checked = true;
        }
        rows.push_back(row);
    }
    return rows;
}

StarReport star_counterexample(int n, int r, const EigenOptions& opt) {
    if (r < 2) throw std::invalid_argument("clique bound must be at least 2");
    if (static_cast<double>(n) <= 8.0 * (1.0 - 1.0 / r))
        throw std::invalid_argument("order must exceed 8(1-1/r)");

    StarReport rep;
    rep.n = n;
    rep.r = r;
    rep.q = signless_laplacian_radius(star(n), opt);
    rep.bound = signless_conjecture_bound(n - 1, r);
    rep.q_matches_n = std::abs(rep.q - n) <= 1e-8 * std::max(1.0, static_cast<double>(n));
    rep.violates_bound = rep.q > rep.bound;
    return rep;
}

namespace {

struct SuiteSlot {
    std::vector<std::string> rows;
    std::vector<std::string> violations;
    std::vector<std::string> equalities;
    bool counted = false;
};

void merge_slots(SuiteSummary& out, std::vector<SuiteSlot>& slots) {
    for (auto& slot : slots) {
        if (slot.counted) ++out.checked;
        for (auto& r : slot.rows) out.csv.push_back(std::move(r));
        for (auto& v : slot.violations) out.violations.push_back(std::move(v));
        for (auto& e : slot.equalities) out.equality_cases.push_back(std::move(e));
    }
}

SuiteSummary suite_local_theorem(int n, const EigenOptions& opt, int jobs) {
    const auto& pool = enumerate_graphs(n);
    SuiteSummary out;
    out.csv.push_back(std::string(ledger_csv_header()) + ",equality");

    std::vector<SuiteSlot> slots(pool.size());
    parallel_for(static_cast<long long>(pool.size()), jobs, [&](long long i) {
        auto& slot = slots[static_cast<std::size_t>(i)];
        const VerificationReport rep = check_local_theorem(pool[static_cast<std::size_t>(i)], opt);
        slot.counted = true;
        slot.rows.push_back(ledger_csv_row(rep.graph6, rep.ledger) + "," +
                            equality_class_name(rep.equality));
        for (const auto& v : rep.violations) slot.violations.push_back(rep.graph6 + ": " + v);
        if (rep.equality != EqualityClass::none) slot.equalities.push_back(rep.graph6);
    });
    merge_slots(out, slots);
    return out;
}

SuiteSummary suite_chromatic(int n, const EigenOptions& opt, int jobs) {
    const auto& pool = enumerate_graphs(n);
    SuiteSummary out;
    out.csv.push_back(std::string(ledger_csv_header()));

    std::vector<SuiteSlot> slots(pool.size());
    parallel_for(static_cast<long long>(pool.size()), jobs, [&](long long i) {
        const Graph& g = pool[static_cast<std::size_t>(i)];
        if (!is_connected(g) || g.order() == 0) return;
        auto& slot = slots[static_cast<std::size_t>(i)];
        slot.counted = true;
        const std::string id = to_graph6(g);
        const BoundLedger led = bound_ledger(g, opt);
        slot.rows.push_back(ledger_csv_row(id, led));
        if (led.slack_hoffman && *led.slack_hoffman < -1e-9)
            slot.violations.push_back(id + ": chi below the ratio bound");
        if (led.slack_cvetkovic && *led.slack_cvetkovic < -1e-9)
            slot.violations.push_back(id + ": chi below the order-gap bound");
        if (led.slack_edwards_elphick && *led.slack_edwards_elphick < -1e-9)
            slot.violations.push_back(id + ": chi below the energy bound");
        if (led.edwards_elphick && led.cvetkovic &&
            *led.edwards_elphick < *led.cvetkovic - 1e-9)
            slot.violations.push_back(id + ": energy bound below order-gap bound");
    });
    merge_slots(out, slots);
    return out;
}

SuiteSummary suite_motzkin_straus(int n, const EigenOptions& opt, int jobs) {
    const auto& pool = enumerate_graphs(n);
    SuiteSummary out;
    out.csv.push_back("graph6,n,m,omega,value,target,abs_err,support_size,support_ok");

    std::vector<SuiteSlot> slots(pool.size());
    parallel_for(static_cast<long long>(pool.size()), jobs, [&](long long i) {
        const Graph& g = pool[static_cast<std::size_t>(i)];
        if (g.order() == 0) return;
        auto& slot = slots[static_cast<std::size_t>(i)];
        slot.counted = true;
        const std::string id = to_graph6(g);
        const auto profile = edge_clique_orders(g);
        const int omega = std::max(profile.omega, 1);
        const double target = 1.0 - 1.0 / omega;
        const auto res = maximize_lagrangian(g, opt.tol, opt.iter_cap);
        const double err = std::abs(res.value - target);
        const bool support_ok = verify_equality_support(g, res.point, profile);
        std::ostringstream row;
        row << id << ',' << g.order() << ',' << g.size() << ',' << omega << ','
            << fmt12(res.value) << ',' << fmt12(target) << ',' << fmt12(err) << ','
            << res.point.support.size() << ',' << bool_cell(support_ok);
        slot.rows.push_back(row.str());
        if (err > 1e-6) slot.violations.push_back(id + ": optimizer misses 1 - 1/omega");
        if (!support_ok) slot.violations.push_back(id + ": support lacks the equality structure");
    });
    merge_slots(out, slots);
    return out;
}

SuiteSummary suite_weighted(int n, const EigenOptions& opt, int jobs) {
    const auto& pool = enumerate_graphs(n);
    SuiteSummary out;
    out.csv.push_back(
        "graph6,n,m,omega,value,abs_err,support_size,support_clique,support_ok");

    std::vector<SuiteSlot> slots(pool.size());
    parallel_for(static_cast<long long>(pool.size()), jobs, [&](long long i) {
        const Graph& g = pool[static_cast<std::size_t>(i)];
        if (g.size() == 0) return;
        auto& slot = slots[static_cast<std::size_t>(i)];
        slot.counted = true;
        const std::string id = to_graph6(g);
        const auto profile = edge_clique_orders(g);
        const auto res = maximize_weighted(g, profile, opt.tol, opt.iter_cap);
        const double err = std::abs(res.value - 1.0);
        const bool clique_support = induces_clique(g, res.point.support);
        const bool support_ok = verify_equality_support(g, res.point, profile);
        std::ostringstream row;
        row << id << ',' << g.order() << ',' << g.size() << ',' << profile.omega << ','
            << fmt12(res.value) << ',' << fmt12(err) << ',' << res.point.support.size() << ','
            << bool_cell(clique_support) << ',' << bool_cell(support_ok);
        slot.rows.push_back(row.str());
        if (err > 1e-6) slot.violations.push_back(id + ": weighted optimizer misses 1");
        if (!clique_support) slot.violations.push_back(id + ": support is not a clique");
        if (!support_ok) slot.violations.push_back(id + ": support lacks the equality structure");
    });
    merge_slots(out, slots);
    return out;
}

SuiteSummary suite_brouwer(int n, int jobs) {
    SuiteSummary out;
    out.csv.push_back("graph6,r,n,m,threshold,antecedent,chi,implication_ok");

    for (int r = 2; r <= 3; ++r) {
        if (n < 2 * r + 1) continue;
        const auto& pool = enumerate_clique_free(n, r);
        const long long threshold = turan_edge_count(n, r) - n / r + 2;

        std::vector<SuiteSlot> slots(pool.size());
        parallel_for(static_cast<long long>(pool.size()), jobs, [&](long long i) {
            const Graph& g = pool[static_cast<std::size_t>(i)];
            auto& slot = slots[static_cast<std::size_t>(i)];
            slot.counted = true;
            const std::string id = to_graph6(g);
            const bool antecedent = g.size() >= threshold;
            const int chi = chromatic_number(g);
            const bool ok = !antecedent || chi <= r;
            std::ostringstream row;
            row << id << ',' << r << ',' << g.order() << ',' << g.size() << ',' << threshold
                << ',' << bool_cell(antecedent) << ',' << chi << ',' << bool_cell(ok);
            slot.rows.push_back(row.str());
            if (!ok)
                slot.violations.push_back(id + ": edge threshold met but not " +
                                          std::to_string(r) + "-partite");
        });
        merge_slots(out, slots);
    }
    return out;
}

}  // namespace

SuiteSummary run_suite(const std::string& suite, int n, const EigenOptions& opt, int jobs) {
    if (n < 0 || n > 8) throw std::invalid_argument("suites run at 0 <= n <= 8");

    SuiteSummary out;
    if (suite == "local-theorem")
        out = suite_local_theorem(n, opt, jobs);
    else if (suite == "chromatic")
        out = suite_chromatic(n, opt, jobs);
    else if (suite == "motzkin-straus")
        out = suite_motzkin_straus(n, opt, jobs);
    else if (suite == "weighted")
        out = suite_weighted(n, opt, jobs);
    else if (suite == "brouwer")
        out = suite_brouwer(n, jobs);
    else
        throw std::invalid_argument("unknown suite: " + suite);

    out.suite = suite;
    out.n = n;
    return out;
}

}  // namespace sturan
