#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alphadom/generators.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/rounding.hpp"

namespace alphadom {

enum class Algorithm { GreedyS1, GreedyS2, GreedyS3, RR, RRWC };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);
/// Stable numeric id used in seed derivation.
std::uint64_t algorithm_id(Algorithm a);

DominatingSet run_algorithm(Algorithm algo, const DominationInstance& inst, const RoundingConfig& rounding);

struct GeneratedSource {
    std::string name;
    GenSpec spec;
    WeightSpec weights;
    std::size_t count = 1;
};

struct FileSource {
    std::string name;
    std::filesystem::path graph;
    std::optional<std::filesystem::path> weights;
};

using GraphSource = std::variant<GeneratedSource, FileSource>;

struct ExperimentConfig {
    std::vector<GraphSource> sources;
    std::vector<Alpha> alphas{Alpha(1, 4), Alpha(1, 2), Alpha(3, 4)};
    std::vector<Algorithm> algorithms;
    std::size_t repetitions = 1;
    Seed base_seed = 0;
    double threshold_upper = 0.5;
    std::optional<std::size_t> max_rounds;
    std::string output;       // prefix for <output>.csv / <output>.json; may be empty
    bool timing = true;       // false zeroes time_ms for byte-exact output
    std::size_t threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

/// Parses the JSON experiment config; relative file paths resolve against
/// `base_dir`.
ExperimentConfig parse_experiment_config(std::istream& in, const std::string& name,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& file);

struct ResultRow {
    std::string graph_id;
    std::string source;
    std::size_t graph_index = 0;
    std::size_t alpha_index = 0;
    std::size_t algorithm_index = 0;
    std::size_t repetition = 0;
    Alpha alpha{1, 1};
    Algorithm algorithm = Algorithm::GreedyS1;
    std::size_t size = 0;
    Weight weight = 0;
    double time_ms = 0.0;
    Seed seed = 0;
    bool feasible = false;
};

/// Seed of one (graph, alpha, algorithm, repetition) cell.
Seed cell_seed(Seed base, std::size_t graph_index, Alpha alpha, Algorithm algo, std::size_t repetition);
/// Seed used to generate graph number `graph_index`.
Seed graph_seed(Seed base, std::size_t graph_index);

struct MaterializedGraph {
    std::string id;
    std::string source;
    std::shared_ptr<const WeightedGraph> graph;
};

std::vector<MaterializedGraph> materialize_graphs(const ExperimentConfig& cfg);

/// Runs every cell on a worker pool and returns rows sorted by
/// (graph, alpha, algorithm, repetition). Throws ContractViolation if any
/// output fails the verifier.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

inline constexpr std::string_view kCsvHeader = "graph,alpha,algorithm,size,weight,time_ms,seed,feasible";

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows);

struct CellSummary {
    std::string group;  // graph id, or source name for family aggregates
    Alpha alpha{1, 1};
    Algorithm algorithm = Algorithm::GreedyS1;
    std::size_t runs = 0;
    double mean_size = 0.0;
    double mean_weight = 0.0;
    double mean_time_ms = 0.0;
};

/// Per-graph cell means and per-source family means.
std::pair<std::vector<CellSummary>, std::vector<CellSummary>> summarize(const std::vector<ResultRow>& rows);

void write_summary_json(std::ostream& os, const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);

}  // namespace alphadom
