#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <tuple>

#include "alphadom/error.hpp"
#include "alphadom/experiment.hpp"

using namespace alphadom;

namespace {

ExperimentConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_experiment_config(in, "config");
}

const char* kSmall = R"({
  "seed": 17,
  "repetitions": 2,
  "alphas": ["1/4", 0.5],
  "algorithms": ["greedy-s1", "greedy-s3", "rr", "rrwc"],
  "timing": false,
  "threads": 1,
  "graphs": [
    {"type": "gnm", "name": "er", "n": 60, "m": 200, "count": 2, "weights": {"min": 1, "max": 71}},
    {"type": "powerlaw_cluster", "name": "pn", "n": 60, "edges_per_new_vertex": 3, "triangle_prob": 0.5},
    {"type": "planted_partition", "name": "plp", "blocks": 3, "block_size": 20, "p_in": 0.3, "p_out": 0.01}
  ]
})";

std::string csv_of(const ExperimentConfig& cfg) {
    std::ostringstream os;
    write_results_csv(os, run_experiment(cfg));
    return os.str();
}

}  // namespace

TEST(Algorithm, NamesRoundTrip) {
    for (Algorithm a : {Algorithm::GreedyS1, Algorithm::GreedyS2, Algorithm::GreedyS3, Algorithm::RR, Algorithm::RRWC})
        EXPECT_EQ(parse_algorithm(to_string(a)), a);
    EXPECT_THROW(parse_algorithm("simulated-annealing"), InputError);
}

TEST(Config, ParsesAllFields) {
    auto cfg = parse(kSmall);
    EXPECT_EQ(cfg.base_seed, 17u);
    EXPECT_EQ(cfg.repetitions, 2u);
    ASSERT_EQ(cfg.alphas.size(), 2u);
    EXPECT_EQ(cfg.alphas[1], Alpha(1, 2));
    EXPECT_EQ(cfg.algorithms.size(), 4u);
    ASSERT_EQ(cfg.sources.size(), 3u);
    const auto& er = std::get<GeneratedSource>(cfg.sources[0]);
    EXPECT_EQ(er.count, 2u);
    EXPECT_EQ(er.weights.max, 71);
    EXPECT_FALSE(cfg.timing);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(parse("{"), InputError);
    EXPECT_THROW(parse(R"({"algorithms": ["rr"]})"), InputError);
    EXPECT_THROW(parse(R"({"algorithms": ["rr"], "graphs": [{"type": "lattice"}]})"), InputError);
    EXPECT_THROW(parse(R"({"algorithms": ["rr"], "alphas": ["3/2"], "graphs": [{"type": "gnm", "n": 5, "m": 2}]})"),
                 InputError);
}

TEST(Experiment, OneCell) {
    auto cfg = parse(R"({"algorithms": ["greedy-s2"], "alphas": ["1/2"], "timing": false,
                         "graphs": [{"type": "gnm", "name": "tiny", "n": 10, "m": 15}]})");
    auto rows = run_experiment(cfg);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].graph_id, "tiny-0");
    EXPECT_TRUE(rows[0].feasible);
    EXPECT_EQ(rows[0].time_ms, 0.0);
    std::ostringstream os;
    write_results_csv(os, rows);
    EXPECT_EQ(os.str().substr(0, kCsvHeader.size() + 1), std::string(kCsvHeader) + "\n");
}

TEST(Experiment, RowsSortedAndAllFeasible) {
    auto cfg = parse(kSmall);
    auto rows = run_experiment(cfg);
    EXPECT_EQ(rows.size(), 4u * 2 * 4 * 2);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const ResultRow& r) {
            return std::tuple(r.graph_index, r.alpha_index, r.algorithm_index, r.repetition);
        };
        EXPECT_LT(key(rows[i - 1]), key(rows[i]));
    }
    for (const auto& r : rows) EXPECT_TRUE(r.feasible);
}

TEST(Experiment, ByteIdenticalAcrossRunsAndThreadCounts) {
    auto cfg = parse(kSmall);
    const std::string first = csv_of(cfg);
    EXPECT_EQ(first, csv_of(cfg));
    cfg.threads = 3;
    EXPECT_EQ(first, csv_of(cfg));
}

TEST(Experiment, SeedsStableWhenAnAlgorithmIsAdded) {
    auto cfg = parse(kSmall);
    auto base = run_experiment(cfg);
    cfg.algorithms.insert(cfg.algorithms.begin(), Algorithm::GreedyS2);
    auto wider = run_experiment(cfg);
    for (const auto& r : base) {
        auto it = std::find_if(wider.begin(), wider.end(), [&](const ResultRow& w) {
            return w.graph_id == r.graph_id && w.alpha == r.alpha && w.algorithm == r.algorithm &&
                   w.repetition == r.repetition;
        });
        ASSERT_NE(it, wider.end());
        EXPECT_EQ(it->seed, r.seed);
        EXPECT_EQ(it->weight, r.weight);
    }
}

TEST(Experiment, RepetitionsUseDistinctSeeds) {
    EXPECT_NE(cell_seed(1, 0, Alpha(1, 2), Algorithm::RR, 0), cell_seed(1, 0, Alpha(1, 2), Algorithm::RR, 1));
    EXPECT_NE(cell_seed(1, 0, Alpha(1, 2), Algorithm::RR, 0), cell_seed(1, 0, Alpha(1, 2), Algorithm::RRWC, 0));
    EXPECT_NE(graph_seed(1, 0), graph_seed(1, 1));
}

TEST(Summary, FamilyMeans) {
    auto cfg = parse(kSmall);
    auto rows = run_experiment(cfg);
    auto [cells, families] = summarize(rows);
    EXPECT_EQ(cells.size(), 4u * 2 * 4);
    EXPECT_EQ(families.size(), 3u * 2 * 4);
    for (const auto& f : families) {
        if (f.group == "er") EXPECT_EQ(f.runs, 4u);
        else EXPECT_EQ(f.runs, 2u);
    }
    std::ostringstream os;
    write_summary_json(os, cfg, rows);
    EXPECT_NE(os.str().find("\"all_feasible\": true"), std::string::npos);
}
