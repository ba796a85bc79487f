// Command-line front end: every computation and verifier of the library,
// with reproducible batch scans and machine-readable reports. JSON is the
// canonical output; text is a rendering of the same data. Exit codes:
// 0 success/verified, 1 verification failure, 2 input error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "flowpoly/arrays.hpp"
#include "flowpoly/flows.hpp"
#include "flowpoly/genperm.hpp"
#include "flowpoly/io.hpp"
#include "flowpoly/multigraph.hpp"
#include "flowpoly/pipedreams.hpp"
#include "flowpoly/reduction.hpp"
#include "flowpoly/verify.hpp"

using namespace flowpoly;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("FLOWPOLY_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void emit(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << report.dump(2) << "\n";
    }
}

Strategy strategy_by_name(const std::string& name, uint64_t seed) {
    if (name == "special") return special_strategy();
    if (name == "lex") return lex_first_strategy();
    if (name == "lexlast") return lex_last_strategy();
    if (name == "longest") return longest_edge_strategy();
    if (name == "random") return random_strategy(seed);
    throw CLI::ValidationError("unknown strategy: " + name);
}

std::string polynomial_text(const SparsePolynomial& p, const std::string& var) {
    return p.to_string(var);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flow polytope dissections, degree sequences, generalized permutahedra and pipe dreams"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("-o,--out", out_path, "write the JSON report to a file");

    // --- ld ---
    auto* ld_cmd = app.add_subcommand("ld", "left-degree sequence multiset of a graph");
    std::string ld_graph, ld_strategy = "special";
    uint64_t ld_seed = 0;
    bool ld_tree = false;
    ld_cmd->add_option("graph", ld_graph, "graph file (text or json)")->required();
    ld_cmd->add_option("--strategy", ld_strategy, "special|lex|lexlast|longest|random");
    ld_cmd->add_option("--seed", ld_seed, "seed for the random strategy");
    ld_cmd->add_flag("--tree", ld_tree, "include the reduction tree dump");

    // --- tri ---
    auto* tri_cmd = app.add_subcommand("tri", "triangular constraint array, with solutions");
    std::string tri_graph, tri_f;
    bool tri_solutions = false;
    bool tri_json = false;
    tri_cmd->add_option("graph", tri_graph)->required();
    tri_cmd->add_option("--F", tri_f, "edge subset: tail,head[,copy];...");
    tri_cmd->add_flag("--solutions", tri_solutions, "also list the integer solutions");
    tri_cmd->add_flag("--json", tri_json, "emit the JSON dump instead of text");

    // --- kostant / feasible ---
    auto* kostant_cmd = app.add_subcommand("kostant", "Kostant partition function K_G(a)");
    std::string ko_graph, ko_netflow;
    kostant_cmd->add_option("graph", ko_graph)->required();
    kostant_cmd->add_option("netflow", ko_netflow, "comma-separated integers")->required();

    auto* feas_cmd = app.add_subcommand("feasible", "flow polytope nonemptiness");
    std::string fe_graph, fe_netflow;
    feas_cmd->add_option("graph", fe_graph)->required();
    feas_cmd->add_option("netflow", fe_netflow)->required();

    // --- volume / ehrhart ---
    auto* vol_cmd = app.add_subcommand("volume", "normalized volume of the flow polytope of tilde(G)");
    std::string vol_graph;
    vol_cmd->add_option("graph", vol_graph)->required();

    auto* ehr_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial of the flow polytope of tilde(G)");
    std::string ehr_graph;
    ehr_cmd->add_option("graph", ehr_graph)->required();

    // --- newton ---
    auto* newton_cmd = app.add_subcommand("newton", "left-degree polynomial and its saturation verdict");
    std::string newton_graph;
    newton_cmd->add_option("graph", newton_graph)->required();

    // --- genperm ---
    auto* gp_cmd = app.add_subcommand("genperm", "z-parameters and lattice points");
    std::string gp_graph, gp_f;
    long long gp_k = -1;
    gp_cmd->add_option("graph", gp_graph)->required();
    gp_cmd->add_option("--F", gp_f, "edge subset: tail,head[,copy];...");
    gp_cmd->add_option("--k", gp_k, "use the level-k parameters instead of an edge subset");

    // --- schubert / grothendieck / transition ---
    std::string perm_arg;
    auto* schub_cmd = app.add_subcommand("schubert", "Schubert polynomial from reduced pipe dreams");
    schub_cmd->add_option("perm", perm_arg, "one-line notation, e.g. 14523")->required();
    auto* groth_cmd = app.add_subcommand("grothendieck", "Grothendieck polynomial from pipe dreams");
    groth_cmd->add_option("perm", perm_arg)->required();
    auto* trans_cmd = app.add_subcommand("transition", "Schubert polynomial via the transition rule");
    trans_cmd->add_option("perm", perm_arg)->required();

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "run a verifier; exit 1 on a counterexample");
    std::string verify_what, verify_arg;
    uint64_t verify_seed = 1;
    verify_cmd->add_option("what", verify_what, "theorem-a|encoding|corollaries|theorem-c")->required();
    verify_cmd->add_option("input", verify_arg, "graph file, or a permutation for theorem-c")->required();
    verify_cmd->add_option("--seed", verify_seed, "seed for the random strategies");

    // --- scan ---
    auto* scan_cmd = app.add_subcommand("scan", "exhaustive scans");
    scan_cmd->require_subcommand(1);
    auto* scan_conj = scan_cmd->add_subcommand("conjecture", "saturation scan over S_n");
    int scan_n = 5;
    int scan_jobs = default_jobs();
    scan_conj->add_option("--n", scan_n, "symmetric group size")->required();
    scan_conj->add_option("--jobs", scan_jobs, "worker count");
    auto* scan_graphs = scan_cmd->add_subcommand("graphs", "verifier scan over small graphs");
    int sg_max_vertices = 4, sg_max_edges = 6;
    bool sg_simple = false;
    std::string sg_csv;
    scan_graphs->add_option("--max-vertices", sg_max_vertices)->required();
    scan_graphs->add_option("--max-edges", sg_max_edges)->required();
    scan_graphs->add_flag("--simple", sg_simple, "simple graphs only");
    scan_graphs->add_option("--csv", sg_csv, "verdict CSV; existing hashes are skipped on resume");
    scan_graphs->add_option("--jobs", scan_jobs, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Json report;
        bool verified = true;

        if (ld_cmd->parsed()) {
            MultiGraph g = load_graph(ld_graph);
            Strategy strategy = strategy_by_name(ld_strategy, ld_seed);
            report["graph"] = graph_to_json(g);
            report["strategy"] = ld_strategy;
            if (ld_tree) {
                ReductionTree tree = build_tree(g, strategy);
                report["ld"] = ld_to_json(g, ld_multiset(tree));
                report["tree"] = tree_to_json(tree);
            } else {
                report["ld"] = ld_to_json(g, ld_multiset(g, strategy));
            }
            long long leaves = 0;
            for (const auto& item : report["ld"]) leaves += item["mult"].get<long long>();
            report["leaves"] = leaves;
        } else if (tri_cmd->parsed()) {
            MultiGraph g = load_graph(tri_graph);
            EdgeSubset f = parse_edge_subset(g, tri_f);
            ConstraintArray a = tri_array(g, f);
            if (!tri_json) {
                std::string text = render(a);
                if (tri_solutions) {
                    auto cols = sol_first_columns(a);
                    text += "\n# solutions: " + std::to_string(sol_count(a));
                    for (const auto& [seq, mult] : cols) {
                        text += "\n# first column:";
                        for (int v : seq) text += " " + std::to_string(v);
                        if (mult > 1) text += " (x" + std::to_string(mult) + ")";
                    }
                }
                if (out_path.empty()) {
                    std::cout << text << "\n";
                } else {
                    std::ofstream out(out_path);
                    out << text << "\n";
                }
                return 0;
            }
            report["n"] = a.n;
            report["simple"] = a.simple_graph;
            report["cum_edges"] = std::vector<long long>(a.cum_edges.begin() + 1, a.cum_edges.end());
            report["offsets"] = a.offsets;
            report["mult"] = a.mult;
            report["render"] = render(a);
            if (tri_solutions) {
                report["solutions"] = sol_count(a);
            }
        } else if (kostant_cmd->parsed()) {
            MultiGraph g = load_graph(ko_graph);
            Netflow a = parse_netflow(ko_netflow);
            std::string why;
            long long count = 0;
            for_each_flow(g, a, {}, [&](const std::vector<long long>&) { ++count; }, &why);
            report["kostant"] = count;
            if (!why.empty()) report["diagnostic"] = why;
        } else if (feas_cmd->parsed()) {
            MultiGraph g = load_graph(fe_graph);
            Netflow a = parse_netflow(fe_netflow);
            report["feasible"] = feasible(g, a);
        } else if (vol_cmd->parsed()) {
            MultiGraph g = load_graph(vol_graph);
            report["volume"] = volume(g);
        } else if (ehr_cmd->parsed()) {
            MultiGraph g = load_graph(ehr_graph);
            report["ehrhart"] = ehrhart_to_json(ehrhart(g));
            report["order"] = "lowest degree first";
        } else if (newton_cmd->parsed()) {
            MultiGraph g = load_graph(newton_graph);
            SparsePolynomial p = ld_polynomial(g);
            report["polynomial"] = polynomial_to_json(p);
            report["text"] = polynomial_text(p, "t");
            SnpVerdict v = snp_check(p);
            report["snp"] = v.snp;
            report["components_gp"] = v.components_gp;
            if (!v.detail.empty()) report["detail"] = v.detail;
            verified = v.snp && v.components_gp;
        } else if (gp_cmd->parsed()) {
            MultiGraph g = load_graph(gp_graph);
            std::optional<GenPermSpec> spec;
            if (gp_k >= 0) {
                if (!gp_f.empty()) throw std::invalid_argument("--F and --k are mutually exclusive");
                spec = z_parameters_level(g, gp_k);
            } else {
                spec = z_parameters(g, parse_edge_subset(g, gp_f));
            }
            if (!spec) {
                report["feasible"] = false;
            } else {
                report["feasible"] = true;
                report["z"] = genperm_to_json(*spec);
                Json pts = Json::array();
                for (const auto& p : genperm_lattice_points(*spec)) pts.push_back(p);
                report["lattice_points"] = pts;
            }
        } else if (schub_cmd->parsed() || groth_cmd->parsed() || trans_cmd->parsed()) {
            Permutation pi = Permutation::from_string(perm_arg);
            SparsePolynomial p = schub_cmd->parsed()   ? schubert(pi)
                                 : groth_cmd->parsed() ? grothendieck(pi)
                                                       : transition(pi);
            report["perm"] = pi.to_string();
            report["polynomial"] = polynomial_to_json(p);
            report["text"] = polynomial_text(p, "x");
        } else if (verify_cmd->parsed()) {
            if (verify_what == "theorem-c") {
                Permutation pi = Permutation::from_string(verify_arg);
                TheoremCReport rep = verify_theorem_C(pi);
                report["pi"] = pi.to_string();
                report["applicable"] = rep.applicable;
                report["snp"] = rep.grothendieck_snp;
                report["components_gp"] = rep.components_gp;
                report["schubert_01"] = rep.schubert_01_coefficients;
                report["schubert_saturated"] = rep.schubert_saturated;
                report["ok"] = rep.ok();
                if (!rep.ok()) report["counterexample"] = rep.detail;
                verified = rep.ok();
            } else {
                MultiGraph g = load_graph(verify_arg);
                VerifyReport rep;
                if (verify_what == "theorem-a") {
                    rep = verify_theorem_A(
                        g, {lex_first_strategy(), lex_last_strategy(), random_strategy(verify_seed)});
                } else if (verify_what == "encoding") {
                    rep = verify_encoding_chain_all(g);
                } else if (verify_what == "corollaries") {
                    rep = verify_corollaries(g);
                } else {
                    throw std::invalid_argument("unknown verifier: " + verify_what);
                }
                report["what"] = verify_what;
                report["graph"] = graph_to_json(g);
                report["ok"] = rep.ok;
                if (!rep.ok) report["counterexample"] = rep.detail;
                verified = rep.ok;
            }
        } else if (scan_conj->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            ScanReport rep = conjecture_scan(scan_n, scan_jobs);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            report["n"] = rep.n;
            report["permutations"] = rep.permutations;
            report["counterexamples"] = rep.counterexamples;
            report["failures"] = rep.failures;
            report["summary"] = std::to_string(rep.counterexamples) + " counterexamples / " +
                                std::to_string(rep.permutations) + " permutations";
            // Timing goes to stderr so identical configs emit byte-identical reports.
            std::cerr << report["summary"].get<std::string>() << " (" << ms << " ms)\n";
            verified = rep.counterexamples == 0;
        } else if (scan_graphs->parsed()) {
            std::set<std::string> done;
            if (!sg_csv.empty()) {
                std::ifstream in(sg_csv);
                std::string line;
                while (std::getline(in, line)) {
                    auto comma = line.find(',');
                    if (comma != std::string::npos) done.insert(line.substr(0, comma));
                }
            }
            std::vector<MultiGraph> graphs;
            for (const MultiGraph& g : sg_simple ? all_simple_graphs(sg_max_vertices - 1)
                                                 : all_multigraphs(sg_max_vertices - 1, sg_max_edges)) {
                if (g.edge_count() > sg_max_edges) continue;
                graphs.push_back(g);
            }
            // Verdicts are collected per index and written in graph order so
            // identical configs yield byte-identical reports at any job count.
            std::vector<int> verdict(graphs.size(), -1);  // -1 skipped, 0 fail, 1 ok
            std::vector<std::string> hashes(graphs.size());
            for (size_t i = 0; i < graphs.size(); ++i) {
                char hash[32];
                std::snprintf(hash, sizeof hash, "%016llx",
                              static_cast<unsigned long long>(graphs[i].hash()));
                hashes[i] = hash;
            }
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= graphs.size()) return;
                    if (done.count(hashes[i])) continue;
                    VerifyReport a = verify_theorem_A(
                        graphs[i], {lex_first_strategy(), lex_last_strategy(), random_strategy(1)});
                    VerifyReport b = verify_corollaries(graphs[i]);
                    verdict[i] = a.ok && b.ok ? 1 : 0;
                }
            };
            int threads = std::max(1, scan_jobs);
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            std::ofstream csv;
            if (!sg_csv.empty()) csv.open(sg_csv, std::ios::app);
            long long failures = 0, scanned = 0, skipped = 0;
            Json fail_list = Json::array();
            for (size_t i = 0; i < graphs.size(); ++i) {
                if (verdict[i] < 0) {
                    ++skipped;
                    continue;
                }
                ++scanned;
                if (verdict[i] == 0) {
                    ++failures;
                    fail_list.push_back(graph_to_json(graphs[i]));
                }
                if (csv.is_open())
                    csv << hashes[i] << "," << (verdict[i] ? "ok" : "FAIL") << ",\""
                        << graphs[i].canonical_string() << "\"\n";
            }
            report["scanned"] = scanned;
            report["skipped"] = skipped;
            report["failures"] = failures;
            report["failing_graphs"] = fail_list;
            verified = failures == 0;
        }

        emit(report, out_path);
        return verified ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
