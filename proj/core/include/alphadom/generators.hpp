#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "alphadom/graph.hpp"
#include "alphadom/random.hpp"

namespace alphadom {

struct GnmSpec {
    std::size_t n = 0;
    std::size_t m = 0;
};

/// Holme–Kim growth. `edges_per_new_vertex` is the per-step attachment count.
struct PowerlawClusterSpec {
    std::size_t n = 0;
    std::size_t edges_per_new_vertex = 1;
    double triangle_prob = 0.0;
};

struct PlantedPartitionSpec {
    std::size_t blocks = 1;
    std::size_t block_size = 1;
    double p_in = 0.0;
    double p_out = 0.0;
};

using GenSpec = std::variant<GnmSpec, PowerlawClusterSpec, PlantedPartitionSpec>;

/// Inclusive uniform weight range.
struct WeightSpec {
    Weight min = 1;
    Weight max = 71;
};

/// Result of a generator: unit-weight graph plus, for planted partitions,
/// the block of every vertex.
struct GeneratedGraph {
    WeightedGraph graph;
    std::vector<std::uint32_t> ground_truth;
};

WeightedGraph gen_gnm(std::size_t n, std::size_t m, Seed seed);
WeightedGraph gen_powerlaw_cluster(std::size_t n, std::size_t edges_per_new_vertex, double triangle_prob, Seed seed);
GeneratedGraph gen_planted_partition(std::size_t blocks, std::size_t block_size, double p_in, double p_out,
                                     Seed seed);

GeneratedGraph generate(const GenSpec& spec, Seed seed);

/// i.i.d. uniform weights on {min..max}, drawn in vertex-index order.
WeightedGraph assign_weights(const WeightedGraph& g, const WeightSpec& spec, Seed seed);

}  // namespace alphadom
