#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alphadom {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

// Intermediate type for exact products of weights and degrees.
__extension__ typedef __int128 WideInt;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with positive integer vertex weights, stored as
/// CSR. Immutable after construction; every constructor validates symmetry,
/// sortedness, absence of self-loops/duplicates and weights >= 1.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Takes per-vertex neighbor lists that must already be symmetric and
    /// sorted ascending. Throws InputError otherwise.
    WeightedGraph(const std::vector<std::vector<VertexId>>& adjacency, std::vector<Weight> weights,
                  std::vector<std::string> labels = {});

    /// Builds from an edge list. Self-loops and duplicate edges are rejected.
    static WeightedGraph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Weight> weights,
                                    std::vector<std::string> labels = {});

    std::size_t num_vertices() const noexcept { return weights_.size(); }
    std::size_t num_edges() const noexcept { return targets_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const;
    Weight weight(VertexId v) const;
    std::span<const Weight> weights() const noexcept { return weights_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// External label, or the decimal index when the graph is unlabeled.
    std::string label(VertexId v) const;
    std::span<const std::string> labels() const noexcept { return labels_; }

    bool has_edge(VertexId u, VertexId v) const;
    std::vector<Edge> edges() const;

    /// Same structure and labels, new weights.
    WeightedGraph with_weights(std::vector<Weight> weights) const;

    /// Subgraph induced by `vertices` (must be distinct). Local vertex i
    /// corresponds to vertices[i].
    WeightedGraph induced_subgraph(std::span<const VertexId> vertices) const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> targets_;
    std::vector<Weight> weights_;
    std::vector<std::string> labels_;
};

/// Exact rational α in (0, 1].
class Alpha {
public:
    Alpha(std::int64_t numerator, std::int64_t denominator);

    /// Accepts "p/q" fractions and plain decimals such as "0.25".
    static Alpha parse(std::string_view text);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    /// ⌈α·k⌉ by integer ceiling division.
    std::int64_t ceil_times(std::int64_t k) const noexcept { return (num_ * k + den_ - 1) / den_; }

    friend bool operator==(const Alpha&, const Alpha&) = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

std::size_t closed_degree(const WeightedGraph& g, VertexId v);
std::size_t max_degree(const WeightedGraph& g);

/// Sum of weights over the closed neighborhood N[v].
Weight closed_neighborhood_weight(const WeightedGraph& g, VertexId v);

/// A graph together with α; demands are precomputed.
class DominationInstance {
public:
    DominationInstance(WeightedGraph graph, Alpha alpha);
    DominationInstance(std::shared_ptr<const WeightedGraph> graph, Alpha alpha);

    const WeightedGraph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const WeightedGraph>& graph_ptr() const noexcept { return graph_; }
    Alpha alpha() const noexcept { return alpha_; }
    std::size_t num_vertices() const noexcept { return graph_->num_vertices(); }

    /// ⌈α·d̄_v⌉; always in [1, d̄_v].
    std::int64_t demand(VertexId v) const;
    std::span<const std::int64_t> demands() const noexcept { return demands_; }

private:
    std::shared_ptr<const WeightedGraph> graph_;
    Alpha alpha_;
    std::vector<std::int64_t> demands_;
};

/// Candidate solution with a cached total weight. Keeps a view of the
/// weights of the graph it was created for, so the graph must outlive it.
class DominatingSet {
public:
    explicit DominatingSet(const WeightedGraph& g);

    bool contains(VertexId v) const { return member_.at(v) != 0; }
    /// Returns false if v was already a member.
    bool insert(VertexId v);
    bool erase(VertexId v);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    Weight total_weight() const noexcept { return total_weight_; }
    std::size_t universe_size() const noexcept { return member_.size(); }

    /// Members in ascending order.
    std::vector<VertexId> members() const;

    friend bool operator==(const DominatingSet& a, const DominatingSet& b) { return a.member_ == b.member_; }

private:
    std::span<const Weight> weights_;
    std::vector<char> member_;
    std::size_t size_ = 0;
    Weight total_weight_ = 0;
};

DominatingSet make_set(const WeightedGraph& g, std::span<const VertexId> members);
DominatingSet full_set(const WeightedGraph& g);

/// |N[v] ∩ D|.
std::int64_t coverage_count(const WeightedGraph& g, const DominatingSet& d, VertexId v);

/// Recomputed Σ_{v∈D} w_v (independent of the cache).
Weight total_weight(const WeightedGraph& g, const DominatingSet& d);

/// Vertices whose coverage is below demand, mapped to the shortfall.
struct DeficiencyReport {
    std::map<VertexId, std::int64_t> shortfalls;

    bool empty() const noexcept { return shortfalls.empty(); }
};

DeficiencyReport deficiency(const DominationInstance& inst, const DominatingSet& d);
bool is_feasible(const DominationInstance& inst, const DominatingSet& d);

}  // namespace alphadom
