#include "alphadom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "alphadom/error.hpp"

namespace alphadom {

WeightedGraph::WeightedGraph(const std::vector<std::vector<VertexId>>& adjacency, std::vector<Weight> weights,
                             std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
    const std::size_t n = adjacency.size();
    if (weights_.size() != n)
        throw InputError("weight vector has " + std::to_string(weights_.size()) + " entries for " +
                         std::to_string(n) + " vertices");
    if (!labels_.empty() && labels_.size() != n) throw InputError("label table size does not match vertex count");
    for (std::size_t v = 0; v < n; ++v)
        if (weights_[v] < 1) throw InputError("vertex " + std::to_string(v) + " has non-positive weight");

    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& nbrs = adjacency[v];
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] >= n) throw InputError("neighbor index out of range at vertex " + std::to_string(v));
            if (nbrs[i] == v) throw InputError("self-loop at vertex " + std::to_string(v));
            if (i > 0 && nbrs[i - 1] >= nbrs[i])
                throw InputError("neighbor list of vertex " + std::to_string(v) + " is not strictly ascending");
        }
        offsets_[v + 1] = offsets_[v] + nbrs.size();
    }
    targets_.reserve(offsets_[n]);
    for (const auto& nbrs : adjacency) targets_.insert(targets_.end(), nbrs.begin(), nbrs.end());

    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : neighbors(v))
            if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
                throw InputError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
}

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Weight> weights,
                                        std::vector<std::string> labels) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& nbrs = adj[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
    return WeightedGraph(adj, std::move(weights), std::move(labels));
}

void WeightedGraph::check_vertex(VertexId v) const {
    if (v >= num_vertices())
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(num_vertices()) + ")");
}

std::span<const VertexId> WeightedGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t WeightedGraph::degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
}

Weight WeightedGraph::weight(VertexId v) const {
    check_vertex(v);
    return weights_[v];
}

std::string WeightedGraph::label(VertexId v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
    auto nbrs = neighbors(u);
    check_vertex(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

WeightedGraph WeightedGraph::with_weights(std::vector<Weight> weights) const {
    if (weights.size() != num_vertices()) throw InputError("weight vector size does not match vertex count");
    for (Weight w : weights)
        if (w < 1) throw InputError("non-positive weight");
    WeightedGraph g = *this;
    g.weights_ = std::move(weights);
    return g;
}

WeightedGraph WeightedGraph::induced_subgraph(std::span<const VertexId> vertices) const {
    std::vector<std::int64_t> local(num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        if (local[vertices[i]] != -1) throw InputError("induced_subgraph: repeated vertex");
        local[vertices[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<std::vector<VertexId>> adj(vertices.size());
    std::vector<Weight> w(vertices.size());
    std::vector<std::string> labels;
    if (has_labels()) labels.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        w[i] = weights_[vertices[i]];
        if (has_labels()) labels[i] = labels_[vertices[i]];
        for (VertexId u : neighbors(vertices[i]))
            if (local[u] >= 0) adj[i].push_back(static_cast<VertexId>(local[u]));
        std::sort(adj[i].begin(), adj[i].end());
    }
    return WeightedGraph(adj, std::move(w), std::move(labels));
}

// ---------------------------------------------------------------------------

Alpha::Alpha(std::int64_t numerator, std::int64_t denominator) : num_(numerator), den_(denominator) {
    if (den_ <= 0 || num_ <= 0 || num_ > den_)
        throw InputError("alpha must lie in (0, 1], got " + std::to_string(num_) + "/" + std::to_string(den_));
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError("cannot parse alpha '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Alpha Alpha::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Alpha(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));

    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Alpha(parse_int(text, text), 1);
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    auto digits = [](std::string_view part) {
        return std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(int_part) || !digits(frac_part) || (int_part.empty() && frac_part.empty()))
        throw InputError("cannot parse alpha '" + std::string(text) + "'");
    if (frac_part.size() > 12) throw InputError("alpha '" + std::string(text) + "' has too many decimal places");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    return Alpha(whole * den + frac, den);
}

std::string Alpha::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

// ---------------------------------------------------------------------------

std::size_t closed_degree(const WeightedGraph& g, VertexId v) { return g.degree(v) + 1; }

std::size_t max_degree(const WeightedGraph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Weight closed_neighborhood_weight(const WeightedGraph& g, VertexId v) {
    Weight sum = g.weight(v);
    for (VertexId u : g.neighbors(v)) sum += g.weight(u);
    return sum;
}

DominationInstance::DominationInstance(WeightedGraph graph, Alpha alpha)
    : DominationInstance(std::make_shared<const WeightedGraph>(std::move(graph)), alpha) {}

DominationInstance::DominationInstance(std::shared_ptr<const WeightedGraph> graph, Alpha alpha)
    : graph_(std::move(graph)), alpha_(alpha) {
    if (!graph_) throw InputError("null graph");
    demands_.resize(graph_->num_vertices());
    for (VertexId v = 0; v < graph_->num_vertices(); ++v)
        demands_[v] = alpha_.ceil_times(static_cast<std::int64_t>(closed_degree(*graph_, v)));
}

std::int64_t DominationInstance::demand(VertexId v) const {
    if (v >= demands_.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    return demands_[v];
}

// ---------------------------------------------------------------------------

DominatingSet::DominatingSet(const WeightedGraph& g) : weights_(g.weights()), member_(g.num_vertices(), 0) {}

bool DominatingSet::insert(VertexId v) {
    if (v >= member_.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (member_[v]) return false;
    member_[v] = 1;
    ++size_;
    total_weight_ += weights_[v];
    return true;
}

bool DominatingSet::erase(VertexId v) {
    if (v >= member_.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (!member_[v]) return false;
    member_[v] = 0;
    --size_;
    total_weight_ -= weights_[v];
    return true;
}

std::vector<VertexId> DominatingSet::members() const {
    std::vector<VertexId> out;
    out.reserve(size_);
    for (VertexId v = 0; v < member_.size(); ++v)
        if (member_[v]) out.push_back(v);
    return out;
}

DominatingSet make_set(const WeightedGraph& g, std::span<const VertexId> members) {
    DominatingSet d(g);
    for (VertexId v : members) d.insert(v);
    return d;
}

DominatingSet full_set(const WeightedGraph& g) {
    DominatingSet d(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) d.insert(v);
    return d;
}

std::int64_t coverage_count(const WeightedGraph& g, const DominatingSet& d, VertexId v) {
    if (d.universe_size() != g.num_vertices()) throw InputError("dominating set belongs to a different graph");
    std::int64_t r = d.contains(v) ? 1 : 0;
    for (VertexId u : g.neighbors(v)) r += d.contains(u) ? 1 : 0;
    return r;
}

Weight total_weight(const WeightedGraph& g, const DominatingSet& d) {
    Weight sum = 0;
    for (VertexId v : d.members()) sum += g.weight(v);
    return sum;
}

DeficiencyReport deficiency(const DominationInstance& inst, const DominatingSet& d) {
    DeficiencyReport report;
    const auto& g = inst.graph();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::int64_t r = coverage_count(g, d, v);
        if (r < inst.demand(v)) report.shortfalls.emplace(v, inst.demand(v) - r);
    }
    return report;
}

bool is_feasible(const DominationInstance& inst, const DominatingSet& d) {
    const auto& g = inst.graph();
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (coverage_count(g, d, v) < inst.demand(v)) return false;
    return true;
}

}  // namespace alphadom
