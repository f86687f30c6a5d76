#include "sturan/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace sturan {

double nikiforov_bound(long long m, int omega) {
    if (omega < 1 || m < 0) throw std::invalid_argument("need omega >= 1 and m >= 0");
    if (omega == 1 && m > 0)
        throw std::invalid_argument("omega = 1 is inconsistent with a nonempty edge set");
    return std::sqrt(2.0 * (1.0 - 1.0 / omega) * static_cast<double>(m));
}

double local_turan_bound(const EdgeCliqueProfile& p) {
    double s = 0.0;
    for (const auto& e : p.edge_orders) s += static_cast<double>(e.c - 1) / e.c;
    return std::sqrt(2.0 * s);
}

Fraction nikiforov_radicand(long long m, int omega) {
    if (omega < 1 || m < 0) throw std::invalid_argument("need omega >= 1 and m >= 0");
    if (omega == 1 && m > 0)
        throw std::invalid_argument("omega = 1 is inconsistent with a nonempty edge set");
    return Fraction::checked(static_cast<__int128>(2) * m * (omega - 1), omega);
}

Fraction local_radicand(const EdgeCliqueProfile& p) {
    std::map<int, long long> by_order;
    for (const auto& e : p.edge_orders) ++by_order[e.c];
    Fraction total(0);
    for (auto [c, cnt] : by_order)
        total = total + Fraction::checked(static_cast<__int128>(2) * cnt * (c - 1), c);
    return total;
}

double stanley_bound(long long m) {
    if (m < 0) throw std::invalid_argument("need m >= 0");
    return -0.5 + std::sqrt(2.0 * static_cast<double>(m) + 0.25);
}

double hoffman_chi(double lambda1, double lambdan) {
    if (!(lambdan < 0)) throw std::domain_error("hoffman bound needs lambdan < 0");
    return 1.0 + lambda1 / (-lambdan);
}

double cvetkovic_chi(int n, double lambda1) {
    if (!(lambda1 < n)) throw std::domain_error("cvetkovic bound needs lambda1 < n");
    return 1.0 + lambda1 / (n - lambda1);
}

double edwards_elphick_chi(long long m, double lambda1) {
    const double l2 = lambda1 * lambda1;
    if (!(l2 < 2.0 * static_cast<double>(m)))
        throw std::domain_error("edwards-elphick bound needs lambda1^2 < 2m");
    return 1.0 + l2 / (2.0 * static_cast<double>(m) - l2);
}

double signless_conjecture_bound(long long m, int r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (m < 0) throw std::invalid_argument("need m >= 0");
    return std::sqrt(8.0 * (1.0 - 1.0 / r) * static_cast<double>(m));
}

double gregory_rhs(int n, int k) {
    if (k < 2 || n < k) throw std::invalid_argument("need k >= 2 and n >= k");
    const double a = k - 2.0;
    return 0.5 - a / (2.0 * std::sqrt(a * a + 4.0 * (k - 1.0) * (n - k + 1.0)));
}

BoundLedger bound_ledger(const Graph& g, const EigenOptions& opt) {
    BoundLedger led;
    led.n = g.order();
    led.m = g.size();
    if (led.n == 0) return led;

    const EdgeCliqueProfile prof = edge_clique_orders(g);
    led.omega = prof.omega;
    const SpectrumSummary sp = spectrum_summary(g, opt);
    led.lambda1 = sp.lambda1;
    led.lambdan = sp.lambdan;
    led.q = sp.q;

    led.nikiforov = nikiforov_bound(led.m, led.omega);
    led.local = local_turan_bound(prof);
    led.stanley = stanley_bound(led.m);
    led.slack_nikiforov = led.nikiforov - led.lambda1;
    led.slack_local = led.local - led.lambda1;
    led.slack_stanley = led.stanley - led.lambda1;

    if (led.n <= 16) led.chi = chromatic_number(g);

    if (led.lambdan < 0) led.hoffman = hoffman_chi(led.lambda1, led.lambdan);
    if (led.lambda1 < led.n) led.cvetkovic = cvetkovic_chi(led.n, led.lambda1);
    if (led.lambda1 * led.lambda1 < 2.0 * static_cast<double>(led.m))
        led.edwards_elphick = edwards_elphick_chi(led.m, led.lambda1);
    if (led.chi) {
        if (led.hoffman) led.slack_hoffman = *led.chi - *led.hoffman;
        if (led.cvetkovic) led.slack_cvetkovic = *led.chi - *led.cvetkovic;
        if (led.edwards_elphick) led.slack_edwards_elphick = *led.chi - *led.edwards_elphick;
    }

    if (led.omega >= 2) {
        led.signless_conj = signless_conjecture_bound(led.m, led.omega);
        led.slack_signless = *led.signless_conj - led.q;
    }
    if (led.chi && *led.chi >= 2) led.gregory = gregory_rhs(led.n, *led.chi);
    return led;
}

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? fmt12(*v) : std::string(); }

}  // namespace

std::string ledger_csv_header() {
    return "graph6,n,m,omega,chi,lambda1,lambdan,q,nikiforov,local,stanley,"
           "hoffman_chi,cvetkovic_chi,edwards_elphick_chi,signless_conj,gregory_rhs,"
           "slack_nikiforov,slack_local,slack_stanley,slack_hoffman,slack_cvetkovic,"
           "slack_edwards_elphick,slack_signless";
}

nlohmann::json ledger_json(const std::string& id, const BoundLedger& led) {
    nlohmann::json j;
    j["graph6"] = id;
    j["n"] = led.n;
    j["m"] = led.m;
    j["omega"] = led.omega;
    if (led.chi) j["chi"] = *led.chi;
    j["lambda1"] = led.lambda1;
    j["lambdan"] = led.lambdan;
    j["q"] = led.q;
    j["nikiforov"] = led.nikiforov;
    j["local"] = led.local;
    j["stanley"] = led.stanley;
    if (led.hoffman) j["hoffman_chi"] = *led.hoffman;
    if (led.cvetkovic) j["cvetkovic_chi"] = *led.cvetkovic;
    if (led.edwards_elphick) j["edwards_elphick_chi"] = *led.edwards_elphick;
    if (led.signless_conj) j["signless_conj"] = *led.signless_conj;
    if (led.gregory) j["gregory_rhs"] = *led.gregory;
    j["slack_nikiforov"] = led.slack_nikiforov;
    j["slack_local"] = led.slack_local;
    j["slack_stanley"] = led.slack_stanley;
    if (led.slack_hoffman) j["slack_hoffman"] = *led.slack_hoffman;
    if (led.slack_cvetkovic) j["slack_cvetkovic"] = *led.slack_cvetkovic;
    if (led.slack_edwards_elphick) j["slack_edwards_elphick"] = *led.slack_edwards_elphick;
    if (led.slack_signless) j["slack_signless"] = *led.slack_signless;
    return j;
}

std::string ledger_csv_row(const std::string& id, const BoundLedger& led) {
    std::string row = id;
    row += ',' + std::to_string(led.n);
    row += ',' + std::to_string(led.m);
    row += ',' + std::to_string(led.omega);
    row += ',' + (led.chi ? std::to_string(*led.chi) : std::string());
    row += ',' + fmt12(led.lambda1);
    row += ',' + fmt12(led.lambdan);
    row += ',' + fmt12(led.q);
    row += ',' + fmt12(led.nikiforov);
    row += ',' + fmt12(led.local);
    row += ',' + fmt12(led.stanley);
    row += ',' + cell(led.hoffman);
    row += ',' + cell(led.cvetkovic);
    row += ',' + cell(led.edwards_elphick);
    row += ',' + cell(led.signless_conj);
    row += ',' + cell(led.gregory);
    row += ',' + fmt12(led.slack_nikiforov);
    row += ',' + fmt12(led.slack_local);
    row += ',' + fmt12(led.slack_stanley);
    row += ',' + cell(led.slack_hoffman);
    row += ',' + cell(led.slack_cvetkovic);
    row += ',' + cell(led.slack_edwards_elphick);
    row += ',' + cell(led.slack_signless);
    return row;
}

}  // namespace sturan
