#include "alphadom/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "alphadom/community.hpp"
#include "alphadom/error.hpp"
#include "alphadom/greedy.hpp"
#include "alphadom/io.hpp"

namespace alphadom {

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::GreedyS1: return "greedy-s1";
        case Algorithm::GreedyS2: return "greedy-s2";
        case Algorithm::GreedyS3: return "greedy-s3";
        case Algorithm::RR: return "rr";
        case Algorithm::RRWC: return "rrwc";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::GreedyS1, Algorithm::GreedyS2, Algorithm::GreedyS3, Algorithm::RR, Algorithm::RRWC})
        if (to_string(a) == name) return a;
    throw InputError("unknown algorithm '" + std::string(name) +
                     "' (expected greedy-s1, greedy-s2, greedy-s3, rr or rrwc)");
}

std::uint64_t algorithm_id(Algorithm a) { return static_cast<std::uint64_t>(a) + 1; }

DominatingSet run_algorithm(Algorithm algo, const DominationInstance& inst, const RoundingConfig& rounding) {
    switch (algo) {
        case Algorithm::GreedyS1: return greedy_dominate(inst, Strategy::ByWeight);
        case Algorithm::GreedyS2: return greedy_dominate(inst, Strategy::ByWeightPerDegree);
        case Algorithm::GreedyS3: return greedy_dominate(inst, Strategy::ByNeighborhoodShare);
        case Algorithm::RR: return alg_rr(inst, rounding);
        case Algorithm::RRWC: return alg_rrwc(inst, rounding);
    }
    throw InputError("unknown algorithm");
}

void ExperimentConfig::validate() const {
    if (sources.empty()) throw InputError("experiment needs at least one graph source");
    if (alphas.empty()) throw InputError("experiment needs at least one alpha");
    if (algorithms.empty()) throw InputError("experiment needs at least one algorithm");
    if (repetitions < 1) throw InputError("repetitions must be >= 1");
    if (!(threshold_upper > 0.0 && threshold_upper <= 1.0)) throw InputError("threshold_upper must lie in (0, 1]");
    if (max_rounds && *max_rounds < 1) throw InputError("max_rounds must be >= 1");
    for (const auto& s : sources)
        if (const auto* g = std::get_if<GeneratedSource>(&s); g && g->count < 1)
            throw InputError("graph source '" + g->name + "' has count 0");
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

GenSpec parse_gen_spec(const json& j, const std::string& type) {
    if (type == "gnm") return GnmSpec{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>()};
    if (type == "powerlaw_cluster")
        return PowerlawClusterSpec{j.at("n").get<std::size_t>(), j.at("edges_per_new_vertex").get<std::size_t>(),
                                   j.at("triangle_prob").get<double>()};
    if (type == "planted_partition")
        return PlantedPartitionSpec{j.at("blocks").get<std::size_t>(), j.at("block_size").get<std::size_t>(),
                                    j.at("p_in").get<double>(), j.at("p_out").get<double>()};
    throw InputError("unknown graph type '" + type + "'");
}

Alpha alpha_from_json(const json& j) {
    if (j.is_string()) return Alpha::parse(j.get<std::string>());
    if (j.is_number_integer()) return Alpha(j.get<std::int64_t>(), 1);
    if (j.is_number()) {
        // Round-trip through the shortest decimal form so 0.25 stays 1/4.
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        return Alpha::parse(buf);
    }
    throw InputError("alpha must be a string like \"1/4\" or a number");
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in, const std::string& name,
                                         const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw InputError(name + ": invalid JSON: " + e.what());
    }
    ExperimentConfig cfg;
    try {
        if (doc.contains("seed")) cfg.base_seed = doc["seed"].get<Seed>();
        if (doc.contains("repetitions")) cfg.repetitions = doc["repetitions"].get<std::size_t>();
        if (doc.contains("output")) cfg.output = doc["output"].get<std::string>();
        if (doc.contains("threads")) cfg.threads = doc["threads"].get<std::size_t>();
        if (doc.contains("timing")) cfg.timing = doc["timing"].get<bool>();
        if (doc.contains("alphas")) {
            cfg.alphas.clear();
            for (const auto& a : doc["alphas"]) cfg.alphas.push_back(alpha_from_json(a));
        }
        for (const auto& a : doc.at("algorithms")) cfg.algorithms.push_back(parse_algorithm(a.get<std::string>()));
        if (doc.contains("rounding")) {
            const auto& r = doc["rounding"];
            if (r.contains("threshold_upper")) cfg.threshold_upper = r["threshold_upper"].get<double>();
            if (r.contains("max_rounds") && !r["max_rounds"].is_null())
                cfg.max_rounds = r["max_rounds"].get<std::size_t>();
        }
        for (const auto& g : doc.at("graphs")) {
            const std::string type = g.at("type").get<std::string>();
            const std::string gname = g.value("name", type);
            if (type == "file") {
                FileSource fs{gname, base_dir / g.at("edges").get<std::string>(), std::nullopt};
                if (g.contains("weights")) fs.weights = base_dir / g["weights"].get<std::string>();
                cfg.sources.emplace_back(std::move(fs));
            } else {
                GeneratedSource gs{gname, parse_gen_spec(g, type), WeightSpec{}, g.value("count", std::size_t{1})};
                if (g.contains("weights")) {
                    gs.weights.min = g["weights"].at("min").get<Weight>();
                    gs.weights.max = g["weights"].at("max").get<Weight>();
                }
                cfg.sources.emplace_back(std::move(gs));
            }
        }
    } catch (const json::exception& e) {
        throw InputError(name + ": " + e.what());
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open config " + file.string());
    return parse_experiment_config(in, file.string(), file.parent_path());
}

Seed graph_seed(Seed base, std::size_t graph_index) { return derive_seed(base, {0x6772617068ULL, graph_index}); }

Seed cell_seed(Seed base, std::size_t graph_index, Alpha alpha, Algorithm algo, std::size_t repetition) {
    return derive_seed(base, {graph_index, static_cast<std::uint64_t>(alpha.numerator()),
                              static_cast<std::uint64_t>(alpha.denominator()), algorithm_id(algo), repetition});
}

std::vector<MaterializedGraph> materialize_graphs(const ExperimentConfig& cfg) {
    std::vector<MaterializedGraph> out;
    for (const auto& src : cfg.sources) {
        if (const auto* gs = std::get_if<GeneratedSource>(&src)) {
            for (std::size_t i = 0; i < gs->count; ++i) {
                const Seed s = graph_seed(cfg.base_seed, out.size());
                auto g = assign_weights(generate(gs->spec, s).graph, gs->weights, s);
                out.push_back({gs->name + "-" + std::to_string(i), gs->name,
                               std::make_shared<const WeightedGraph>(std::move(g))});
            }
        } else {
            const auto& fs = std::get<FileSource>(src);
            out.push_back({fs.name, fs.name, std::make_shared<const WeightedGraph>(load_graph(fs.graph, fs.weights))});
        }
    }
    return out;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto graphs = materialize_graphs(cfg);

    std::vector<ResultRow> rows;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
        for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai)
            for (std::size_t k = 0; k < cfg.algorithms.size(); ++k)
                for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
                    ResultRow row;
                    row.graph_id = graphs[gi].id;
                    row.source = graphs[gi].source;
                    row.graph_index = gi;
                    row.alpha_index = ai;
                    row.algorithm_index = k;
                    row.repetition = rep;
                    row.alpha = cfg.alphas[ai];
                    row.algorithm = cfg.algorithms[k];
                    row.seed = cell_seed(cfg.base_seed, gi, row.alpha, row.algorithm, rep);
                    rows.push_back(std::move(row));
                }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            ResultRow& row = rows[i];
            try {
                const DominationInstance inst(graphs[row.graph_index].graph, row.alpha);
                RoundingConfig rc{cfg.threshold_upper, cfg.max_rounds, row.seed};
                const auto t0 = std::chrono::steady_clock::now();
                const DominatingSet d = run_algorithm(row.algorithm, inst, rc);
                const auto t1 = std::chrono::steady_clock::now();
                row.time_ms = cfg.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
                row.size = d.size();
                row.weight = d.total_weight();
                row.feasible = is_feasible(inst, d);
                if (!row.feasible)
                    throw ContractViolation(std::string(to_string(row.algorithm)) + " returned an infeasible set on " +
                                            row.graph_id + " at alpha " + row.alpha.to_string());
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = rows.size();
            }
        }
    };
    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(rows.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
    os << kCsvHeader << '\n';
    char time_buf[32];
    for (const auto& r : rows) {
        std::snprintf(time_buf, sizeof time_buf, "%.3f", r.time_ms);
        os << r.graph_id << ',' << r.alpha.to_string() << ',' << to_string(r.algorithm) << ',' << r.size << ','
           << r.weight << ',' << time_buf << ',' << r.seed << ',' << (r.feasible ? "true" : "false") << '\n';
    }
}

std::pair<std::vector<CellSummary>, std::vector<CellSummary>> summarize(const std::vector<ResultRow>& rows) {
    auto aggregate = [&rows](auto key_of, auto group_of) {
        std::map<decltype(key_of(rows.front())), CellSummary> acc;
        for (const auto& r : rows) {
            auto& c = acc[key_of(r)];
            c.group = group_of(r);
            c.alpha = r.alpha;
            c.algorithm = r.algorithm;
            ++c.runs;
            c.mean_size += static_cast<double>(r.size);
            c.mean_weight += static_cast<double>(r.weight);
            c.mean_time_ms += r.time_ms;
        }
        std::vector<CellSummary> out;
        for (auto& [k, c] : acc) {
            const auto runs = static_cast<double>(c.runs);
            c.mean_size /= runs;
            c.mean_weight /= runs;
            c.mean_time_ms /= runs;
            out.push_back(c);
        }
        return out;
    };
    if (rows.empty()) return {};

    std::map<std::string, std::size_t> source_order;
    for (const auto& r : rows) source_order.emplace(r.source, source_order.size());

    auto per_graph = aggregate(
        [](const ResultRow& r) { return std::tuple(r.graph_index, r.alpha_index, r.algorithm_index); },
        [](const ResultRow& r) { return r.graph_id; });
    auto per_family = aggregate(
        [&](const ResultRow& r) { return std::tuple(source_order.at(r.source), r.alpha_index, r.algorithm_index); },
        [](const ResultRow& r) { return r.source; });
    return {std::move(per_graph), std::move(per_family)};
}

void write_summary_json(std::ostream& os, const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
    auto [cells, families] = summarize(rows);
    auto to_json = [](const std::vector<CellSummary>& v, const char* key) {
        json arr = json::array();
        for (const auto& c : v)
            arr.push_back({{key, c.group},
                           {"alpha", c.alpha.to_string()},
                           {"algorithm", std::string(to_string(c.algorithm))},
                           {"runs", c.runs},
                           {"mean_size", c.mean_size},
                           {"mean_weight", c.mean_weight},
                           {"mean_time_ms", c.mean_time_ms}});
        return arr;
    };
    json doc;
    doc["seed"] = cfg.base_seed;
    doc["repetitions"] = cfg.repetitions;
    doc["rows"] = rows.size();
    doc["all_feasible"] = std::all_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.feasible; });
    doc["families"] = to_json(families, "source");
    doc["cells"] = to_json(cells, "graph");
    os << doc.dump(2) << '\n';
}

}  // namespace alphadom
