#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sturan/bounds.hpp"
#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/spectral.hpp"

namespace sturan {

enum class EqualityClass { none, complete_bipartite, complete_regular_multipartite };

const char* equality_class_name(EqualityClass c);

struct VerificationReport {
    std::string graph6;
    BoundLedger ledger;
    EqualityClass equality = EqualityClass::none;
    std::vector<std::string> violations;
};

// Checks lambda <= sqrt(2 sum (c-1)/c) and, at relative slack below 1e-7,
// that the graph (isolated vertices stripped) is complete bipartite (omega 2)
// or complete regular multipartite (omega >= 3), and conversely. Edgeless
// graphs are reported untested. Failures are recorded, never thrown.
VerificationReport check_local_theorem(const Graph& g, const EigenOptions& opt = {});

// If e(g) >= e(T_r(n)) - floor(n/r) + 2 then chi(g) <= r must follow.
// Returns whether the implication holds. Requires omega(g) <= r, n >= 2r+1.
bool check_brouwer(const Graph& g, int r);

// If sum_{i<j} n_i n_j >= e(T_r(n)) - s then every part size must lie in
// [floor(n/r) - s, ceil(n/r) + s]. Returns whether the implication holds.
// Requires 0 <= s < n.
bool check_mubayi(const PartitionSpec& parts, long long s);

struct SpexCcReport {
    int n = 0;
    int r = 0;
    long long candidates = 0;   // classes passing both filters
    std::string best_graph6;    // canonical form of an argmax
    double best_lambda = 0.0;
    // Filled when 2 <= r <= n-1 so the reference graph exists.
    std::optional<std::string> turan_minus_graph6;
    double turan_minus_lambda = 0.0;
    bool matches_turan_minus = false;
};

// Exhaustive maximum of lambda over K_{r+1}-free graphs with connected
// complement on n vertices. Ties resolve to the lexicographically least
// canonical graph6 string. Guard: n <= 9.
SpexCcReport spex_cc_search(int n, int r, const EigenOptions& opt = {}, int jobs = 1);

struct TuranMinusReport {
    int n = 0;
    int r = 0;
    long long turan_edges = 0;
    long long minus_edges = 0;
    double lambda_turan = 0.0;
    double lambda_minus = 0.0;
    double claim_margin = 0.0;  // lambda_minus - (lambda_turan - 2r/n)
    bool edge_identity = false; // minus_edges == turan_edges - (r-1)
    bool edge_floor = false;    // minus_edges >= turan_edges - 17r/8
    bool lambda_close = false;  // claim_margin > -1e-8
    bool co_connected = false;
};

// Desk-checkable fragments of the co-connected extremal theorem
// instantiated at T_r^-(n). Requires 2 <= r <= n-1, n <= 600.
TuranMinusReport turan_minus_claims(int n, int r, const EigenOptions& opt = {});

struct GregoryRecord {
    int n = 0;
    int k = 0;
    int t = 0;
    int s = 0;
    double lambda = 0.0;
    double x0 = 0.0;           // shared Perron component on the clique layer
    double sum_S = 0.0;        // sum of x_u^2 over the odd layers
    double identity_rhs = 0.0; // 1/2 - C(k-1,2) x0^2 / lambda
    double conj_rhs = 0.0;     // gregory_rhs(n, k)
    double claim8_margin = 0.0;
    double claim9_margin = 0.0;
    bool violates_conjecture = false;
    double identity_err = 0.0; // |sum_S - identity_rhs|
    double gap_scaled = 0.0;   // (1/2 - sum_S) n^3 / k^5
};

// Builds the layered gadget, solves for its Perron vector, and fills the
// record. Throws if the eigensolver output breaks the exact identities it
// must satisfy (sum identity to 1e-10, equal clique-layer components to
// 1e-10, nonnegative margin bounds). Requires k >= 2, 2(k-1) <= n <= 600.
GregoryRecord gregory_experiment(int n, int k, const EigenOptions& opt = {});

struct KiteGapRow {
    long long m = 0;
    int w = 0;
    double nikiforov = 0.0;
    double local = 0.0;
    double gap = 0.0;
    double gap_over_sqrt_m = 0.0;
    bool identity_checked = false; // graph small enough to build the profile
};

// Closed-form bound gap table for kites. When the kite fits in memory the
// clique profile is built and 2 sum (c-1)/c == m + C(w-1,2) is asserted in
// exact arithmetic. Requires w >= 3 and each m > w*C(w-1,2).
std::vector<KiteGapRow> kite_gap_scan(int w, const std::vector<long long>& ms);

struct StarReport {
    int n = 0;
    int r = 0;
    double q = 0.0;
    double bound = 0.0;     // sqrt(8 (1-1/r) (n-1))
    bool q_matches_n = false;
    bool violates_bound = false;
};

// Signless Laplacian radius of the star versus the conjectured K_{r+1}-free
// bound. Under the precondition n > 8(1-1/r) the bound must be violated.
StarReport star_counterexample(int n, int r, const EigenOptions& opt = {});

struct SuiteSummary {
    std::string suite;
    int n = 0;
    long long checked = 0;
    std::vector<std::string> violations;      // graph6 ids with failure tags
    std::vector<std::string> equality_cases;  // graph6 ids (local-theorem)
    std::vector<std::string> csv;             // header plus one row per check
};

// Named exhaustive checks over all isomorphism classes at order n:
//   local-theorem   lambda vs the clique-order bound plus equality census
//   chromatic       chi vs Hoffman / Cvetkovic / Edwards-Elphick, connected
//   motzkin-straus  optimizer value vs 1 - 1/omega, support structure
//   weighted        weighted optimizer value vs 1, support induces a clique
//   brouwer         edge-threshold implies r-partite, r in {2,3}
// Rows and ids follow enumeration order (ascending canonical graph6), so
// output is schedule-invariant. Guard: n <= 8.
SuiteSummary run_suite(const std::string& suite, int n, const EigenOptions& opt = {},
                       int jobs = 1);

}  // namespace sturan
