#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sturan/bounds.hpp"
#include "sturan/canonical.hpp"
#include "sturan/cliques.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/graph6.hpp"
#include "sturan/lagrangian.hpp"
#include "sturan/parallel.hpp"
#include "sturan/spectral.hpp"
#include "sturan/verifier.hpp"

namespace {

using nlohmann::json;
using namespace sturan;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    double tol = 1e-10;
    long long iter_cap = 1'000'000;
    int jobs = 0;  // 0: machine parallelism
    std::string output = "csv";
};

EigenOptions eigen_options(const RunConfig& cfg) {
    EigenOptions opt;
    opt.tol = cfg.tol;
    opt.iter_cap = cfg.iter_cap;
    return opt;
}

// Inline graph sources shared by bounds/convert/lagrangian.
struct GraphSources {
    std::vector<std::string> g6;
    std::string g6_file;
    std::vector<long long> kite_specs;        // flattened (m, w) pairs
    std::vector<int> turan_specs;             // flattened (n, r) pairs
    std::vector<int> turan_minus_specs;       // flattened (n, r) pairs
    std::vector<int> gregory_specs;           // flattened (n, k) pairs
    std::vector<int> star_orders;
    std::vector<std::string> multipartite_specs;
};

void add_graph_source_flags(CLI::App* cmd, GraphSources& src) {
    cmd->add_option("--g6", src.g6, "graph6 string (repeatable)");
    cmd->add_option("--g6-file", src.g6_file, "file with one graph6 string per line");
    cmd->add_option("--kite", src.kite_specs, "kite with M edges and clique order W")
        ->expected(2);
    cmd->add_option("--turan", src.turan_specs, "Turan graph on N vertices, R parts")
        ->expected(2);
    cmd->add_option("--turan-minus", src.turan_minus_specs,
                    "Turan graph minus the canonical star, N vertices, R parts")
        ->expected(2);
    cmd->add_option("--gregory", src.gregory_specs, "layered gadget on N vertices, target K")
        ->expected(2);
    cmd->add_option("--star", src.star_orders, "star on N vertices (repeatable)");
    cmd->add_option("--multipartite", src.multipartite_specs,
                    "complete multipartite graph with part sizes a,b,c (repeatable)");
}

PartitionSpec parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad part size: " + item);
        parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return PartitionSpec(std::move(parts));
}

std::vector<Graph> collect_graphs(const GraphSources& src, bool stdin_fallback) {
    std::vector<Graph> out;
    for (const auto& s : src.g6) out.push_back(from_graph6(s));
    if (!src.g6_file.empty()) {
        std::ifstream in(src.g6_file);
        if (!in) throw std::invalid_argument("cannot open " + src.g6_file);
        std::string line;
        long long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                out.push_back(from_graph6(line));
            } catch (const graph6_error& e) {
                throw CLI::ValidationError(src.g6_file + ":" + std::to_string(lineno) + ": " +
                                           e.what());
            }
        }
    }
    for (std::size_t i = 0; i + 1 < src.kite_specs.size(); i += 2)
        out.push_back(kite(src.kite_specs[i], static_cast<int>(src.kite_specs[i + 1])));
    for (std::size_t i = 0; i + 1 < src.turan_specs.size(); i += 2)
        out.push_back(turan_graph(src.turan_specs[i], src.turan_specs[i + 1]));
    for (std::size_t i = 0; i + 1 < src.turan_minus_specs.size(); i += 2)
        out.push_back(turan_minus(src.turan_minus_specs[i], src.turan_minus_specs[i + 1]));
    for (std::size_t i = 0; i + 1 < src.gregory_specs.size(); i += 2)
        out.push_back(gregory_gadget(src.gregory_specs[i], src.gregory_specs[i + 1]));
    for (int n : src.star_orders) out.push_back(star(n));
    for (const auto& spec : src.multipartite_specs)
        out.push_back(complete_multipartite(parse_parts(spec)));

    if (out.empty() && stdin_fallback) {
        std::string line;
        long long lineno = 0;
        while (std::getline(std::cin, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                out.push_back(from_graph6(line));
            } catch (const graph6_error& e) {
                throw CLI::ValidationError("stdin:" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    if (out.empty()) throw std::invalid_argument("no input graphs");
    return out;
}

int run_bounds(const RunConfig& cfg, const GraphSources& src) {
    const std::vector<Graph> graphs = collect_graphs(src, true);
    const EigenOptions opt = eigen_options(cfg);

    std::vector<std::string> ids(graphs.size());
    std::vector<BoundLedger> ledgers(graphs.size());
    parallel_for(static_cast<long long>(graphs.size()), cfg.jobs, [&](long long i) {
        const auto u = static_cast<std::size_t>(i);
        ids[u] = to_graph6(graphs[u]);
        ledgers[u] = bound_ledger(graphs[u], opt);
    });

    if (cfg.output == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i)
            rows.push_back(ledger_json(ids[i], ledgers[i]));
        std::cout << rows.dump(2) << '\n';
    } else {
        std::cout << ledger_csv_header() << '\n';
        for (std::size_t i = 0; i < graphs.size(); ++i)
            std::cout << ledger_csv_row(ids[i], ledgers[i]) << '\n';
    }
    return kExitOk;
}

int run_verify(const RunConfig& cfg, int n, const std::string& suite) {
    const SuiteSummary s = run_suite(suite, n, eigen_options(cfg), cfg.jobs);
    json summary;
    summary["suite"] = s.suite;
    summary["n"] = s.n;
    summary["checked"] = s.checked;
    summary["violations"] = s.violations;
    summary["equality_cases"] = s.equality_cases;

    if (cfg.output == "json") {
        std::cout << summary.dump(2) << '\n';
    } else {
        for (const auto& row : s.csv) std::cout << row << '\n';
        std::cerr << summary.dump() << '\n';
    }
    return s.violations.empty() ? kExitOk : kExitViolation;
}

void emit_table(const RunConfig& cfg, const std::vector<std::string>& csv_rows,
                const json& rows, json verdict) {
    if (cfg.output == "json") {
        verdict["rows"] = rows;
        std::cout << verdict.dump(2) << '\n';
    } else {
        for (const auto& row : csv_rows) std::cout << row << '\n';
        std::cerr << verdict.dump() << '\n';
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    const int a = std::stoi(text.substr(0, colon));
    const int b = std::stoi(text.substr(colon + 1));
    if (b < a) throw std::invalid_argument("empty range: " + text);
    return {a, b};
}

int run_experiment_gregory(const RunConfig& cfg, int k, const std::string& range) {
    const auto [n_from, n_to] = parse_range(range);
    const EigenOptions opt = eigen_options(cfg);

    std::vector<GregoryRecord> recs(static_cast<std::size_t>(n_to - n_from + 1));
    parallel_for(static_cast<long long>(recs.size()), cfg.jobs, [&](long long i) {
        recs[static_cast<std::size_t>(i)] =
            gregory_experiment(n_from + static_cast<int>(i), k, opt);
    });

    std::vector<std::string> csv_rows = {
        "n,k,t,s,lambda,x0,sum_S,identity_rhs,conj_rhs,claim8_margin,claim9_margin,"
        "violates_conjecture,identity_err,gap_scaled"};
    json rows = json::array();
    int first_violation = -1;
    double max_err = 0.0;
    for (const auto& r : recs) {
        std::ostringstream line;
        line << r.n << ',' << r.k << ',' << r.t << ',' << r.s << ',' << fmt12(r.lambda) << ','
             << fmt12(r.x0) << ',' << fmt12(r.sum_S) << ',' << fmt12(r.identity_rhs) << ','
             << fmt12(r.conj_rhs) << ',' << fmt12(r.claim8_margin) << ','
             << fmt12(r.claim9_margin) << ',' << (r.violates_conjecture ? 1 : 0) << ','
             << fmt12(r.identity_err) << ',' << fmt12(r.gap_scaled);
        csv_rows.push_back(line.str());
        rows.push_back({{"n", r.n},
                        {"k", r.k},
                        {"t", r.t},
                        {"s", r.s},
                        {"lambda", r.lambda},
                        {"x0", r.x0},
                        {"sum_S", r.sum_S},
                        {"identity_rhs", r.identity_rhs},
                        {"conj_rhs", r.conj_rhs},
                        {"claim8_margin", r.claim8_margin},
                        {"claim9_margin", r.claim9_margin},
                        {"violates_conjecture", r.violates_conjecture},
                        {"identity_err", r.identity_err},
                        {"gap_scaled", r.gap_scaled}});
        if (r.violates_conjecture && first_violation < 0) first_violation = r.n;
        max_err = std::max(max_err, r.identity_err);
    }

    json verdict;
    verdict["experiment"] = "gregory";
    verdict["k"] = k;
    verdict["n_from"] = n_from;
    verdict["n_to"] = n_to;
    if (first_violation >= 0)
        verdict["first_violation_n"] = first_violation;
    else
        verdict["first_violation_n"] = nullptr;
    verdict["max_identity_err"] = max_err;
    emit_table(cfg, csv_rows, rows, std::move(verdict));
    return kExitOk;
}

int run_experiment_kite(const RunConfig& cfg, int w, const std::vector<long long>& ms) {
    if (ms.empty()) throw std::invalid_argument("kite experiment needs at least one --m");
    const auto table = kite_gap_scan(w, ms);

    std::vector<std::string> csv_rows = {"m,w,nikiforov,local,gap,gap_over_sqrt_m,identity_checked"};
    json rows = json::array();
    long long identities = 0;
    for (const auto& r : table) {
        std::ostringstream line;
        line << r.m << ',' << r.w << ',' << fmt12(r.nikiforov) << ',' << fmt12(r.local) << ','
             << fmt12(r.gap) << ',' << fmt12(r.gap_over_sqrt_m) << ','
             << (r.identity_checked ? 1 : 0);
        csv_rows.push_back(line.str());
        rows.push_back({{"m", r.m},
                        {"w", r.w},
                        {"nikiforov", r.nikiforov},
                        {"local", r.local},
                        {"gap", r.gap},
                        {"gap_over_sqrt_m", r.gap_over_sqrt_m},
                        {"identity_checked", r.identity_checked}});
        identities += r.identity_checked ? 1 : 0;
    }

    json verdict;
    verdict["experiment"] = "kite";
    verdict["w"] = w;
    verdict["identities_checked"] = identities;
    emit_table(cfg, csv_rows, rows, std::move(verdict));
    return kExitOk;
}

int run_experiment_star(const RunConfig& cfg, int n, int r) {
    const StarReport rep = star_counterexample(n, r, eigen_options(cfg));

    std::vector<std::string> csv_rows = {"n,r,q,bound,q_matches_n,violates_bound"};
    std::ostringstream line;
    line << rep.n << ',' << rep.r << ',' << fmt12(rep.q) << ',' << fmt12(rep.bound) << ','
         << (rep.q_matches_n ? 1 : 0) << ',' << (rep.violates_bound ? 1 : 0);
    csv_rows.push_back(line.str());

    json row = {{"n", rep.n},           {"r", rep.r},
                {"q", rep.q},           {"bound", rep.bound},
                {"q_matches_n", rep.q_matches_n}, {"violates_bound", rep.violates_bound}};
    json verdict;
    verdict["experiment"] = "star";
    verdict["q_matches_n"] = rep.q_matches_n;
    verdict["violates_bound"] = rep.violates_bound;
    emit_table(cfg, csv_rows, json::array({row}), std::move(verdict));
    return rep.q_matches_n && rep.violates_bound ? kExitOk : kExitViolation;
}

int run_experiment_spexcc(const RunConfig& cfg, int n, int r) {
    const SpexCcReport rep = spex_cc_search(n, r, eigen_options(cfg), cfg.jobs);

    std::vector<std::string> csv_rows = {
        "n,r,candidates,best_graph6,best_lambda,turan_minus_graph6,turan_minus_lambda,"
        "matches_turan_minus"};
    std::ostringstream line;
    line << rep.n << ',' << rep.r << ',' << rep.candidates << ',' << rep.best_graph6 << ','
         << fmt12(rep.best_lambda) << ',' << (rep.turan_minus_graph6 ? *rep.turan_minus_graph6 : "")
         << ',' << (rep.turan_minus_graph6 ? fmt12(rep.turan_minus_lambda) : "") << ','
         << (rep.matches_turan_minus ? 1 : 0);
    csv_rows.push_back(line.str());

    json row;
    row["n"] = rep.n;
    row["r"] = rep.r;
    row["candidates"] = rep.candidates;
    row["best_graph6"] = rep.best_graph6;
    row["best_lambda"] = rep.best_lambda;
    if (rep.turan_minus_graph6) {
        row["turan_minus_graph6"] = *rep.turan_minus_graph6;
        row["turan_minus_lambda"] = rep.turan_minus_lambda;
        row["matches_turan_minus"] = rep.matches_turan_minus;
    }
    json verdict;
    verdict["experiment"] = "spexcc";
    verdict["recorded_only"] = true;
    emit_table(cfg, csv_rows, json::array({row}), std::move(verdict));
    return kExitOk;
}

int run_experiment_turan_claims(const RunConfig& cfg, int n, int r) {
    const TuranMinusReport rep = turan_minus_claims(n, r, eigen_options(cfg));

    std::vector<std::string> csv_rows = {
        "n,r,turan_edges,minus_edges,lambda_turan,lambda_minus,claim_margin,edge_identity,"
        "edge_floor,lambda_close,co_connected"};
    std::ostringstream line;
    line << rep.n << ',' << rep.r << ',' << rep.turan_edges << ',' << rep.minus_edges << ','
         << fmt12(rep.lambda_turan) << ',' << fmt12(rep.lambda_minus) << ','
         << fmt12(rep.claim_margin) << ',' << (rep.edge_identity ? 1 : 0) << ','
         << (rep.edge_floor ? 1 : 0) << ',' << (rep.lambda_close ? 1 : 0) << ','
         << (rep.co_connected ? 1 : 0);
    csv_rows.push_back(line.str());

    json row = {{"n", rep.n},
                {"r", rep.r},
                {"turan_edges", rep.turan_edges},
                {"minus_edges", rep.minus_edges},
                {"lambda_turan", rep.lambda_turan},
                {"lambda_minus", rep.lambda_minus},
                {"claim_margin", rep.claim_margin},
                {"edge_identity", rep.edge_identity},
                {"edge_floor", rep.edge_floor},
                {"lambda_close", rep.lambda_close},
                {"co_connected", rep.co_connected}};
    json verdict;
    verdict["experiment"] = "turan-claims";
    const bool ok = rep.edge_identity && rep.edge_floor && rep.lambda_close && rep.co_connected;
    verdict["ok"] = ok;
    verdict["claim_margin"] = rep.claim_margin;
    emit_table(cfg, csv_rows, json::array({row}), std::move(verdict));
    return ok ? kExitOk : kExitViolation;
}

Graph graph_from_edge_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("edge spec must look like n:u-v,u-v");
    const int n = std::stoi(spec.substr(0, colon));
    Graph g(n);
    const std::string body = spec.substr(colon + 1);
    if (body.empty()) return g;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge must look like u-v: " + item);
        g.add_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return g;
}

int run_convert(const RunConfig& cfg, const GraphSources& src, const std::string& to,
                const std::vector<std::string>& edge_specs) {
    (void)cfg;
    if (to == "g6") {
        if (edge_specs.empty())
            throw std::invalid_argument("converting to graph6 needs --edges n:u-v,u-v");
        for (const auto& spec : edge_specs)
            std::cout << to_graph6(graph_from_edge_spec(spec)) << '\n';
        return kExitOk;
    }
    if (to != "edges") throw std::invalid_argument("unknown conversion target: " + to);
    const std::vector<Graph> graphs = collect_graphs(src, true);
    for (const Graph& g : graphs) {
        std::ostringstream line;
        line << to_graph6(g) << '\t' << g.order() << '\t' << g.size() << '\t';
        bool first = true;
        for (auto [u, v] : g.edges()) {
            if (!first) line << ' ';
            first = false;
            line << u << '-' << v;
        }
        std::cout << line.str() << '\n';
    }
    return kExitOk;
}

int run_lagrangian(const RunConfig& cfg, const GraphSources& src, bool weighted) {
    const std::vector<Graph> graphs = collect_graphs(src, true);
    if (graphs.size() != 1)
        throw std::invalid_argument("lagrangian expects exactly one input graph");
    const Graph& g = graphs.front();
    const std::string id = to_graph6(g);

    const auto profile = edge_clique_orders(g);
    const int omega = std::max(profile.omega, 1);
    OptimizeResult res;
    double target = 0.0;
    if (weighted) {
        if (g.size() == 0) throw std::invalid_argument("weighted run needs at least one edge");
        res = maximize_weighted(g, profile, cfg.tol, cfg.iter_cap);
        target = 1.0;
    } else {
        res = maximize_lagrangian(g, cfg.tol, cfg.iter_cap);
        target = 1.0 - 1.0 / omega;
    }
    const bool support_ok = verify_equality_support(g, res.point, profile);

    if (cfg.output == "json") {
        json out;
        out["graph6"] = id;
        out["mode"] = weighted ? "weighted" : "plain";
        out["omega"] = omega;
        out["value"] = res.value;
        out["target"] = target;
        out["support"] = res.point.support;
        std::vector<double> point(res.point.entries.data(),
                                  res.point.entries.data() + res.point.entries.size());
        out["point"] = point;
        out["support_ok"] = support_ok;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "graph6,mode,omega,value,target,support_size,support,support_ok\n";
        std::ostringstream line;
        line << id << ',' << (weighted ? "weighted" : "plain") << ',' << omega << ','
             << fmt12(res.value) << ',' << fmt12(target) << ',' << res.point.support.size()
             << ',';
        bool first = true;
        for (int v : res.point.support) {
            if (!first) line << ' ';
            first = false;
            line << v;
        }
        line << ',' << (support_ok ? 1 : 0);
        std::cout << line.str() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral clique-order bound toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--iter-cap", cfg.iter_cap, "iteration budget per solve")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads (0 = machine parallelism)");
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    int exit_code = kExitOk;

    auto* bounds_cmd = app.add_subcommand("bounds", "spectral bound ledger per graph");
    bounds_cmd->fallthrough();
    GraphSources bounds_src;
    add_graph_source_flags(bounds_cmd, bounds_src);
    bounds_cmd->callback([&] { exit_code = run_bounds(cfg, bounds_src); });

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem suite at order n");
    verify_cmd->fallthrough();
    int verify_n = 6;
    std::string verify_suite = "local-theorem";
    verify_cmd->add_option("--n", verify_n, "graph order (0..8)")->required();
    verify_cmd
        ->add_option("--suite", verify_suite,
                     "local-theorem | chromatic | motzkin-straus | weighted | brouwer")
        ->required();
    verify_cmd->callback([&] { exit_code = run_verify(cfg, verify_n, verify_suite); });

    auto* exp_cmd = app.add_subcommand("experiment", "numerical experiments");
    exp_cmd->fallthrough();
    exp_cmd->require_subcommand(1);

    auto* gregory_cmd = exp_cmd->add_subcommand("gregory", "layered-gadget conjecture scan");
    gregory_cmd->fallthrough();
    int gregory_k = 3;
    std::string gregory_range = "6:60";
    gregory_cmd->add_option("--k", gregory_k, "chromatic number of the gadget")->required();
    gregory_cmd->add_option("--n-range", gregory_range, "orders to scan, A:B or single N");
    gregory_cmd->callback(
        [&] { exit_code = run_experiment_gregory(cfg, gregory_k, gregory_range); });

    auto* kite_cmd = exp_cmd->add_subcommand("kite", "bound gap table for kites");
    kite_cmd->fallthrough();
    int kite_w = 4;
    std::vector<long long> kite_ms;
    kite_cmd->add_option("--w", kite_w, "clique order")->required();
    kite_cmd->add_option("--m", kite_ms, "edge count (repeatable)");
    kite_cmd->callback([&] { exit_code = run_experiment_kite(cfg, kite_w, kite_ms); });

    auto* star_cmd = exp_cmd->add_subcommand("star", "signless Laplacian star report");
    star_cmd->fallthrough();
    int star_n = 50, star_r = 3;
    star_cmd->add_option("--n", star_n, "star order")->required();
    star_cmd->add_option("--r", star_r, "clique bound")->required();
    star_cmd->callback([&] { exit_code = run_experiment_star(cfg, star_n, star_r); });

    auto* spex_cmd = exp_cmd->add_subcommand("spexcc", "co-connected extremal search");
    spex_cmd->fallthrough();
    int spex_n = 8, spex_r = 2;
    spex_cmd->add_option("--n", spex_n, "graph order (<= 9)")->required();
    spex_cmd->add_option("--r", spex_r, "clique bound")->required();
    spex_cmd->callback([&] { exit_code = run_experiment_spexcc(cfg, spex_n, spex_r); });

    auto* claims_cmd = exp_cmd->add_subcommand("turan-claims", "pruned Turan graph fragments");
    claims_cmd->fallthrough();
    int claims_n = 300, claims_r = 3;
    claims_cmd->add_option("--n", claims_n, "graph order (<= 600)")->required();
    claims_cmd->add_option("--r", claims_r, "part count")->required();
    claims_cmd->callback([&] { exit_code = run_experiment_turan_claims(cfg, claims_n, claims_r); });

    auto* convert_cmd = app.add_subcommand("convert", "graph6 to edge list and back");
    convert_cmd->fallthrough();
    GraphSources convert_src;
    add_graph_source_flags(convert_cmd, convert_src);
    std::string convert_to = "edges";
    std::vector<std::string> convert_edges;
    convert_cmd->add_option("--to", convert_to, "edges | g6");
    convert_cmd->add_option("--edges", convert_edges, "edge spec n:u-v,u-v (repeatable)");
    convert_cmd->callback(
        [&] { exit_code = run_convert(cfg, convert_src, convert_to, convert_edges); });

    auto* lagr_cmd = app.add_subcommand("lagrangian", "one-shot simplex optimizer run");
    lagr_cmd->fallthrough();
    GraphSources lagr_src;
    add_graph_source_flags(lagr_cmd, lagr_src);
    bool lagr_weighted = false;
    lagr_cmd->add_flag("--weighted", lagr_weighted, "use clique-order edge weights");
    lagr_cmd->callback([&] { exit_code = run_lagrangian(cfg, lagr_src, lagr_weighted); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const graph6_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    }
    return exit_code;
}
