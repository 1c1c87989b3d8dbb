// alphadom: generate graphs, solve and verify alpha-rate dominating sets, run
// seeded benchmark grids.
//
// Exit codes: 0 success, 1 usage/config error, 2 ingestion error,
//             3 infeasible output or internal solver fault.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "alphadom/community.hpp"
#include "alphadom/error.hpp"
#include "alphadom/experiment.hpp"
#include "alphadom/generators.hpp"
#include "alphadom/io.hpp"
#include "alphadom/lp.hpp"
#include "alphadom/oracle.hpp"

namespace fs = std::filesystem;
using namespace alphadom;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIngest = 2, kContract = 3 };

struct GlobalOptions {
    Seed seed = 0;
    std::string alpha = "1/2";
    std::string out;
};

struct GraphInput {
    std::string graph;
    std::string weights;

    void add_to(CLI::App* cmd) {
        cmd->add_option("-g,--graph", graph, "Edge-list file, or a .json bundle")->required();
        cmd->add_option("-w,--weights", weights, "Weight-list file (omit for unit weights)");
    }
    WeightedGraph load() const {
        std::optional<fs::path> w;
        if (!weights.empty()) w = weights;
        return load_graph(graph, w);
    }
};

// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    fn(out);
}

int cmd_generate(const GlobalOptions& g, const std::string& type, std::size_t n, std::size_t m, std::size_t epnv,
                 double triangle_prob, std::size_t blocks, std::size_t block_size, double p_in, double p_out,
                 const WeightSpec& weights, const std::string& format) {
    if (g.out.empty()) throw InputError("generate needs --out <prefix>");
    GenSpec spec;
    if (type == "gnm")
        spec = GnmSpec{n, m};
    else if (type == "powerlaw-cluster")
        spec = PowerlawClusterSpec{n, epnv, triangle_prob};
    else if (type == "planted-partition")
        spec = PlantedPartitionSpec{blocks, block_size, p_in, p_out};
    else
        throw InputError("unknown --type '" + type + "'");

    GeneratedGraph gen = generate(spec, g.seed);
    const WeightedGraph graph = assign_weights(gen.graph, weights, g.seed);
    if (format == "json") {
        emit(g.out + ".json", [&](std::ostream& os) { write_bundle(os, graph); });
    } else {
        write_graph_files(g.out, graph);
    }
    if (!gen.ground_truth.empty())
        emit(g.out + ".blocks.csv", [&](std::ostream& os) {
            write_partition_csv(os, graph, Partition(gen.ground_truth));
        });
    std::cerr << "generated " << graph.num_vertices() << " vertices, " << graph.num_edges() << " edges, max degree "
              << max_degree(graph) << '\n';
    return kOk;
}

int cmd_solve(const GlobalOptions& g, const GraphInput& in, const std::string& algo_name,
              std::optional<std::size_t> rounds, double threshold_upper) {
    const Algorithm algo = parse_algorithm(algo_name);
    const DominationInstance inst(in.load(), Alpha::parse(g.alpha));
    const RoundingConfig rc{threshold_upper, rounds, g.seed};
    const auto t0 = std::chrono::steady_clock::now();
    const DominatingSet d = run_algorithm(algo, inst, rc);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool feasible = is_feasible(inst, d);
    if (!g.out.empty()) emit(g.out, [&](std::ostream& os) { write_solution(os, inst.graph(), d); });
    std::cout << "algorithm=" << algo_name << " alpha=" << inst.alpha().to_string() << " size=" << d.size()
              << " weight=" << d.total_weight() << " time_ms=" << ms << " feasible=" << (feasible ? "true" : "false")
              << '\n';
    return feasible ? kOk : kContract;
}

int cmd_verify(const GlobalOptions& g, const GraphInput& in, const std::string& solution) {
    const DominationInstance inst(in.load(), Alpha::parse(g.alpha));
    std::ifstream sol(solution);
    if (!sol) throw IngestError(solution, 0, "cannot open file");
    const DominatingSet d = parse_solution(sol, solution, inst.graph());
    const DeficiencyReport report = deficiency(inst, d);
    if (report.empty()) {
        std::cout << "feasible size=" << d.size() << " weight=" << d.total_weight() << '\n';
        return kOk;
    }
    std::cout << "infeasible: " << report.shortfalls.size() << " vertices below demand\n";
    emit(g.out, [&](std::ostream& os) { write_deficiency(os, inst, d, report); });
    return kContract;
}

int cmd_bench(const GlobalOptions& g, const std::string& config, bool no_timing, std::size_t threads) {
    ExperimentConfig cfg = load_experiment_config(config);
    if (!g.out.empty()) cfg.output = g.out;
    if (no_timing) cfg.timing = false;
    if (threads) cfg.threads = threads;
    const auto rows = run_experiment(cfg);
    if (cfg.output.empty()) {
        write_results_csv(std::cout, rows);
    } else {
        emit(cfg.output + ".csv", [&](std::ostream& os) { write_results_csv(os, rows); });
        emit(cfg.output + ".json", [&](std::ostream& os) { write_summary_json(os, cfg, rows); });
        std::cerr << "wrote " << rows.size() << " rows to " << cfg.output << ".csv\n";
    }
    return kOk;
}

int cmd_communities(const GlobalOptions& g, const GraphInput& in) {
    const WeightedGraph graph = in.load();
    const Partition p = louvain(graph, g.seed);
    emit(g.out, [&](std::ostream& os) { write_partition_csv(os, graph, p); });
    std::cerr << p.num_communities() << " communities, modularity " << modularity(graph, p) << '\n';
    return kOk;
}

int cmd_oracle(const GlobalOptions& g, const GraphInput& in) {
    const DominationInstance inst(in.load(), Alpha::parse(g.alpha));
    const OracleResult opt = brute_force_opt(inst);
    const double lp = solve(build_lp(inst)).objective_value;
    if (!g.out.empty()) emit(g.out, [&](std::ostream& os) { write_solution(os, inst.graph(), opt.opt_set); });
    std::cout << "opt_weight=" << opt.opt_weight << " size=" << opt.opt_set.size() << " lp_bound=" << lp << '\n';
    return kOk;
}

int cmd_export_lp(const GlobalOptions& g, const GraphInput& in) {
    const DominationInstance inst(in.load(), Alpha::parse(g.alpha));
    emit(g.out, [&](std::ostream& os) { write_lp_text(os, build_lp(inst), &inst.graph()); });
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alphadom: low-weight alpha-rate dominating sets on vertex-weighted graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Base random seed")->capture_default_str();
    app.add_option("--alpha", global.alpha, "Alpha in (0,1], e.g. 1/4 or 0.25")->capture_default_str();
    app.add_option("-o,--out", global.out, "Output path (or prefix for generate/bench)");

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a random weighted graph");
    std::string type = "gnm", format = "text";
    std::size_t n = 5000, m = 50000, epnv = 10, blocks = 5, block_size = 1000;
    double triangle_prob = 0.8, p_in = 0.02, p_out = 0.0001;
    WeightSpec wspec;
    gen->add_option("--type", type, "gnm | powerlaw-cluster | planted-partition")->capture_default_str();
    gen->add_option("-n", n, "Vertex count (gnm, powerlaw-cluster)")->capture_default_str();
    gen->add_option("-m", m, "Edge count (gnm)")->capture_default_str();
    gen->add_option("--epnv", epnv, "Edges per new vertex (powerlaw-cluster)")->capture_default_str();
    gen->add_option("--triangle-prob", triangle_prob, "Triad-closure probability")->capture_default_str();
    gen->add_option("--blocks", blocks, "Number of planted blocks")->capture_default_str();
    gen->add_option("--block-size", block_size, "Vertices per planted block")->capture_default_str();
    gen->add_option("--p-in", p_in, "Intra-block edge probability")->capture_default_str();
    gen->add_option("--p-out", p_out, "Inter-block edge probability")->capture_default_str();
    gen->add_option("--wmin", wspec.min, "Minimum vertex weight")->capture_default_str();
    gen->add_option("--wmax", wspec.max, "Maximum vertex weight")->capture_default_str();
    gen->add_option("--format", format, "text (edges + weights files) | json")->capture_default_str();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Compute a dominating set with one algorithm");
    GraphInput solve_in;
    solve_in.add_to(solve_cmd);
    std::string algo = "greedy-s3";
    std::optional<std::size_t> rounds;
    double threshold_upper = 0.5;
    solve_cmd->add_option("--algo", algo, "greedy-s1 | greedy-s2 | greedy-s3 | rr | rrwc")->capture_default_str();
    solve_cmd->add_option("--rounds", rounds, "Rounding passes (default ceil(log2 maxdeg))");
    solve_cmd->add_option("--threshold-upper", threshold_upper, "Upper end of the rounding draw interval")
        ->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution file for feasibility");
    GraphInput verify_in;
    verify_in.add_to(verify_cmd);
    std::string solution;
    verify_cmd->add_option("-s,--solution", solution, "Solution file, one vertex label per line")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run a seeded experiment grid from a JSON config");
    std::string config;
    bool no_timing = false;
    std::size_t threads = 0;
    bench_cmd->add_option("-c,--config", config, "Experiment config (JSON)")->required();
    bench_cmd->add_flag("--no-timing", no_timing, "Zero the time_ms column for byte-exact output");
    bench_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    // communities
    auto* comm_cmd = app.add_subcommand("communities", "Louvain partition as CSV");
    GraphInput comm_in;
    comm_in.add_to(comm_cmd);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search (n <= 22)");
    GraphInput oracle_in;
    oracle_in.add_to(oracle_cmd);

    // export-lp
    auto* lp_cmd = app.add_subcommand("export-lp", "Write the LP relaxation in LP text format");
    GraphInput lp_in;
    lp_in.add_to(lp_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(global, type, n, m, epnv, triangle_prob, blocks, block_size, p_in, p_out, wspec,
                                format);
        if (solve_cmd->parsed()) return cmd_solve(global, solve_in, algo, rounds, threshold_upper);
        if (verify_cmd->parsed()) return cmd_verify(global, verify_in, solution);
        if (bench_cmd->parsed()) return cmd_bench(global, config, no_timing, threads);
        if (comm_cmd->parsed()) return cmd_communities(global, comm_in);
        if (oracle_cmd->parsed()) return cmd_oracle(global, oracle_in);
        if (lp_cmd->parsed()) return cmd_export_lp(global, lp_in);
    } catch (const IngestError& e) {
        std::cerr << "ingestion error: " << e.what() << '\n';
        return kIngest;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return kContract;
    } catch (const SolverFault& e) {
        std::cerr << "solver fault: " << e.what() << '\n';
        return kContract;
    }
    return kUsage;
}
