#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/harness.hpp"
#include "rainbow/serialize.hpp"

namespace rainbow {

using ordered_json = nlohmann::ordered_json;

namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) throw Error("cannot open output file '" + out_path + "'");
        file << text << "\n";
    }
}

SearchLimits limits_from(std::uint64_t nodes, std::int64_t time_ms, std::uint64_t cap) {
    SearchLimits limits;
    if (nodes > 0) limits.node_budget = nodes;
    if (time_ms > 0) limits.time_budget = std::chrono::milliseconds(time_ms);
    if (cap > 0) limits.enumeration_cap = cap;
    return limits;
}

int run_formula(const std::string& target, int n, const std::string& out_path, std::ostream& out) {
    std::string text;
    if (target == "c14") {
        text = to_json(gamma_r2_c14(n));
    } else if (target == "c13") {
        text = ordered_json{{"n", n}, {"value", gamma_r2_c13(n)}}.dump();
    } else if (target == "pn2") {
        text = ordered_json{{"n", n}, {"value", gamma_r2_pn2(n)}}.dump();
    } else {  // p5kk; --n carries k
        BoundResult b = gamma_r2_p5kk(n);
        text = ordered_json{{"k", n}, {"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact()}}.dump();
    }
    emit(text, out_path, out);
    return 0;
}

int run_construct(int n, const std::string& format, const std::string& out_path, std::ostream& out) {
    RainbowAssignment f = construct_c14(n);
    Graph g = make_circulant(n, {1, 4});
    bool valid = validate_krdf(g, f).valid;
    if (format == "pattern") {
        emit(format_assignment(f), out_path, out);
    } else if (format == "json") {
        ordered_json j{{"n", n},
                       {"pattern", format_assignment(f)},
                       {"weight", f.weight()},
                       {"valid", valid}};
        emit(j.dump(), out_path, out);
    } else {  // dot
        emit(to_dot(g, &f), out_path, out);
    }
    return valid ? 0 : 1;
}

int run_solve(const std::string& graph_spec, int k, const std::string& method,
              const SearchLimits& limits, const std::string& out_path, std::ostream& out) {
    Graph g = parse_graph_spec(graph_spec);
    SolverResult result;
    if (method == "brute") {
        result = solve_bruteforce(g, k);
    } else if (method == "bb") {
        result = solve_branch_bound(g, k, limits);
    } else {  // dp
        const auto& jumps = g.jumps();
        if (g.family() != GraphFamily::Circulant || jumps.size() != 2 || jumps[0] != 1)
            throw UnsupportedGraph("dp method needs a circulant graph with jump set {1,s}");
        result = solve_transfer_dp(g.n(), jumps[1], k);
    }
    emit(to_json(result), out_path, out);
    return result.exact ? 0 : 1;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact 2-rainbow domination toolkit for circulant and generalized Petersen graphs"};
    app.name("rainbow");
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write the report to this file instead of stdout")
        ->capture_default_str();

    // formula
    auto* formula = app.add_subcommand("formula", "Evaluate a closed-form value or bound");
    std::string formula_target;
    int formula_n = 0;
    formula->add_option("target", formula_target, "One of c14, c13, pn2, p5kk")
        ->required()
        ->check(CLI::IsMember({"c14", "c13", "pn2", "p5kk"}));
    formula->add_option("--n", formula_n, "n (or k for p5kk)")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "Emit the explicit optimal pattern for C(n;{1,4})");
    std::string construct_target, construct_format = "pattern";
    int construct_n = 0;
    construct->add_option("target", construct_target, "Only c14 has a construction")
        ->required()
        ->check(CLI::IsMember({"c14"}));
    construct->add_option("--n", construct_n, "Number of vertices (>= 9)")->required();
    construct->add_option("--format", construct_format, "pattern | json | dot")
        ->check(CLI::IsMember({"pattern", "json", "dot"}));

    // validate
    auto* validate = app.add_subcommand("validate", "Check the kRDF condition for an assignment");
    std::string val_graph, val_assignment;
    int val_k = 2;
    validate->add_option("--graph", val_graph, "Graph spec, e.g. circulant:12:1,4")->required();
    validate->add_option("--assignment", val_assignment, "Assignment text")->required();
    validate->add_option("--k", val_k, "Number of colors");

    // audit
    auto* audit = app.add_subcommand("audit", "Beta accounting for a 2-assignment on a 4-regular graph");
    std::string audit_graph, audit_assignment;
    audit->add_option("--graph", audit_graph, "Graph spec")->required();
    audit->add_option("--assignment", audit_assignment, "Assignment text (k = 2)")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Compute gamma_rk exactly");
    std::string solve_graph, solve_method;
    int solve_k = 2;
    std::uint64_t solve_nodes = 0;
    std::int64_t solve_time = 0;
    solve->add_option("--graph", solve_graph, "Graph spec")->required();
    solve->add_option("--k", solve_k, "Number of colors");
    solve->add_option("--method", solve_method, "brute | bb | dp")
        ->required()
        ->check(CLI::IsMember({"brute", "bb", "dp"}));
    solve->add_option("--nodes", solve_nodes, "Node budget for bb");
    solve->add_option("--time-ms", solve_time, "Time budget for bb, in milliseconds");

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check formula, construction, dp and brute force");
    std::string verify_family, verify_oracles, verify_format = "json";
    int verify_from = 0, verify_to = 0;
    verify->add_option("--family", verify_family, "c14 | c13")
        ->required()
        ->check(CLI::IsMember({"c14", "c13"}));
    verify->add_option("--from", verify_from, "First n")->required();
    verify->add_option("--to", verify_to, "Last n")->required();
    verify->add_option("--oracles", verify_oracles,
                       "Comma-separated subset of formula,construction,dp,brute");
    verify->add_option("--format", verify_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // beta-report
    auto* beta = app.add_subcommand("beta-report", "Audit beta over every optimum of C(n;{1,4})");
    int beta_n = 0;
    std::uint64_t beta_cap = 0;
    beta->add_option("--n", beta_n, "Number of vertices (enumeration guard applies)")->required();
    beta->add_option("--cap", beta_cap, "Optimum enumeration cap");

    // adjudicate-p10-2
    auto* adjudicate = app.add_subcommand("adjudicate-p10-2",
                                          "Exact optimum for P(10,2), where the published values conflict");
    std::int64_t adj_time = 30 * 60 * 1000;
    std::uint64_t adj_nodes = 0;
    adjudicate->add_option("--time-ms", adj_time, "Time budget in milliseconds");
    adjudicate->add_option("--nodes", adj_nodes, "Node budget");

    // bench
    auto* bench = app.add_subcommand("bench", "Transfer-dp throughput per n");
    std::string bench_family = "c14";
    int bench_from = 0, bench_to = 0;
    bench->add_option("--family", bench_family, "c14 | c13")->check(CLI::IsMember({"c14", "c13"}));
    bench->add_option("--from", bench_from, "First n (defaults to the family minimum)");
    bench->add_option("--to", bench_to, "Last n")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (formula->parsed()) return run_formula(formula_target, formula_n, out_path, out);
        if (construct->parsed()) return run_construct(construct_n, construct_format, out_path, out);
        if (validate->parsed()) {
            Graph g = parse_graph_spec(val_graph);
            RainbowAssignment f = parse_assignment(val_assignment, val_k);
            ValidationReport report = validate_krdf(g, f);
            emit(to_json(report), out_path, out);
            return report.valid ? 0 : 1;
        }
        if (audit->parsed()) {
            Graph g = parse_graph_spec(audit_graph);
            RainbowAssignment f = parse_assignment(audit_assignment, 2);
            BetaAudit a = beta_audit(g, f);
            emit(to_json(a), out_path, out);
            return a.identity_holds ? 0 : 1;
        }
        if (solve->parsed())
            return run_solve(solve_graph, solve_k, solve_method,
                             limits_from(solve_nodes, solve_time, 0), out_path, out);
        if (verify->parsed()) {
            VerifyFamily family = family_from_name(verify_family);
            OracleSelection oracles;
            if (!verify_oracles.empty()) {
                oracles = OracleSelection::parse(verify_oracles);
            } else if (family == VerifyFamily::C13) {
                oracles.construction = false;
            }
            auto rows = verify_range(family, verify_from, verify_to, oracles);
            emit(verify_format == "csv" ? verify_rows_to_csv(rows) : verify_rows_to_json(rows),
                 out_path, out);
            return all_agree(rows) ? 0 : 1;
        }
        if (beta->parsed()) {
            BetaReport report = beta_report(beta_n, limits_from(0, 0, beta_cap));
            emit(beta_report_to_json(report), out_path, out);
            return report.identity_failures == 0 && report.requirement_met ? 0 : 1;
        }
        if (adjudicate->parsed()) {
            AdjudicationReport report = adjudicate_p10_2(limits_from(adj_nodes, adj_time, 0));
            emit(adjudication_to_json(report), out_path, out);
            return report.conclusive ? 0 : 1;
        }
        if (bench->parsed()) {
            int jump = bench_family == "c14" ? 4 : 3;
            int minimum = bench_family == "c14" ? 9 : 7;
            int from = bench_from > 0 ? bench_from : minimum;
            if (from < minimum)
                throw InvalidParameter("family " + bench_family + " needs n >= " + std::to_string(minimum));
            if (bench_to < from) throw InvalidParameter("--to below --from");
            ordered_json arr = ordered_json::array();
            for (int n = from; n <= bench_to; ++n) {
                SolverResult r = solve_transfer_dp(n, jump);
                double rate = r.elapsed_ms > 0 ? static_cast<double>(r.nodes) / r.elapsed_ms * 1000.0 : 0.0;
                arr.push_back(ordered_json{{"n", n},
                                           {"optimum", r.optimum},
                                           {"states", r.nodes},
                                           {"elapsed_ms", r.elapsed_ms},
                                           {"states_per_sec", rate}});
            }
            emit(arr.dump(2), out_path, out);
            return 0;
        }
    } catch (const Error& e) {
        err << ordered_json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}

} // namespace rainbow
