#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "sturan/cliques.hpp"
#include "sturan/graph.hpp"
#include "sturan/rational.hpp"
#include "sturan/spectral.hpp"

namespace sturan {

// sqrt(2(1 - 1/omega) m)
double nikiforov_bound(long long m, int omega);

// sqrt(2 sum_e (c(e)-1)/c(e))
double local_turan_bound(const EdgeCliqueProfile& p);

// The radicands above as exact rationals, for tolerance-free comparisons.
Fraction nikiforov_radicand(long long m, int omega);
Fraction local_radicand(const EdgeCliqueProfile& p);

// -1/2 + sqrt(2m + 1/4)
double stanley_bound(long long m);

// Chromatic lower bounds.
double hoffman_chi(double lambda1, double lambdan);
double cvetkovic_chi(int n, double lambda1);
double edwards_elphick_chi(long long m, double lambda1);

// sqrt(8(1 - 1/r) m): conjectured cap on the signless Laplacian radius of a
// K_{r+1}-free graph (false; see the star experiment).
double signless_conjecture_bound(long long m, int r);

// 1/2 - (k-2) / (2 sqrt((k-2)^2 + 4(k-1)(n-k+1)))
double gregory_rhs(int n, int k);

// One row per graph: spectral truth, every applicable bound, signed slacks.
// Slack is bound - truth for upper bounds on lambda1, chi - bound for the
// chromatic lower bounds, and bound - q for the signless conjecture row.
struct BoundLedger {
    int n = 0;
    long long m = 0;
    int omega = 0;
    std::optional<int> chi;  // exact, computed only for n <= 16
    double lambda1 = 0.0, lambdan = 0.0, q = 0.0;
    double nikiforov = 0.0, local = 0.0, stanley = 0.0;
    std::optional<double> hoffman, cvetkovic, edwards_elphick;
    std::optional<double> signless_conj;  // r = omega, present when omega >= 2
    std::optional<double> gregory;        // gregory_rhs(n, chi), present when chi >= 2
    double slack_nikiforov = 0.0, slack_local = 0.0, slack_stanley = 0.0;
    std::optional<double> slack_hoffman, slack_cvetkovic, slack_edwards_elphick;
    std::optional<double> slack_signless;
};

BoundLedger bound_ledger(const Graph& g, const EigenOptions& opt = {});

// CSV serialization: fixed column order, floats at 12 significant digits,
// absent optionals as empty cells.
std::string ledger_csv_header();
std::string ledger_csv_row(const std::string& id, const BoundLedger& led);

// JSON object with the same fields; absent optionals are omitted.
nlohmann::json ledger_json(const std::string& id, const BoundLedger& led);

// 12-significant-digit float formatting shared by all CSV writers.
std::string fmt12(double x);

}  // namespace sturan
