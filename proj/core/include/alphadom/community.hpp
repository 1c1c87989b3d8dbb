#pragma once

#include <cstdint>
#include <vector>

#include "alphadom/graph.hpp"
#include "alphadom/random.hpp"
#include "alphadom/rounding.hpp"

namespace alphadom {

/// Disjoint communities covering every vertex; ids are dense in [0, k)
/// and numbered in order of each community's lowest vertex.
class Partition {
public:
    Partition() = default;
    /// Relabels arbitrary ids to the canonical dense numbering.
    explicit Partition(std::vector<std::uint32_t> community_of);

    std::size_t num_vertices() const noexcept { return community_of_.size(); }
    std::size_t num_communities() const noexcept { return k_; }
    std::uint32_t community_of(VertexId v) const { return community_of_.at(v); }
    const std::vector<std::uint32_t>& assignment() const noexcept { return community_of_; }

    /// Members of every community, each list ascending.
    std::vector<std::vector<VertexId>> members() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> community_of_;
    std::size_t k_ = 0;
};

/// Newman modularity with unit edge weights; 0 for an edgeless graph.
double modularity(const WeightedGraph& g, const Partition& p);

struct LouvainResult {
    Partition partition;
    /// Modularity of the induced partition after each completed level.
    std::vector<double> level_modularity;
};

/// Louvain: local moves (ascending scan, best strictly positive gain, lowest
/// community id on ties) alternated with aggregation, until a level makes no
/// move. Deterministic; `seed` is accepted for interface stability only.
LouvainResult louvain_detailed(const WeightedGraph& g);
Partition louvain(const WeightedGraph& g, Seed seed = 0);

struct RrwcTrace {
    std::size_t communities = 0;
    bool feasible_before_repair = false;
    std::size_t added_by_repair = 0;
};

/// Community-partitioned rounding: per community, LP on the induced
/// subgraph with induced demands, amplified rounding with local early exit;
/// then one global repair on the full graph.
DominatingSet alg_rrwc(const DominationInstance& inst, const RoundingConfig& cfg, RrwcTrace* trace = nullptr);

/// Same, with a caller-supplied partition.
DominatingSet alg_rrwc(const DominationInstance& inst, const Partition& partition, const RoundingConfig& cfg,
                       RrwcTrace* trace = nullptr);

}  // namespace alphadom
