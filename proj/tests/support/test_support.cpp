#include "test_support.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace alphadom::testing {

WeightedGraph make_graph(std::vector<Weight> weights, std::initializer_list<std::pair<VertexId, VertexId>> edges,
                         std::vector<std::string> labels) {
    std::vector<Edge> list;
    for (auto [u, v] : edges) list.push_back({u, v});
    const std::size_t n = weights.size();
    return WeightedGraph::from_edges(n, list, std::move(weights), std::move(labels));
}

WeightedGraph path_graph(std::vector<Weight> weights) {
    const std::size_t n = weights.size();
    std::vector<Edge> list;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.emplace_back(1, static_cast<char>('a' + i));
        if (i + 1 < n) list.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    }
    return WeightedGraph::from_edges(n, list, std::move(weights), std::move(labels));
}

WeightedGraph complete_graph(std::vector<Weight> weights) {
    const std::size_t n = weights.size();
    std::vector<Edge> list;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) list.push_back({u, v});
    return WeightedGraph::from_edges(n, list, std::move(weights));
}

WeightedGraph random_graph(Rng& rng, std::size_t max_n, Weight max_weight) {
    const std::size_t n = 1 + rng() % max_n;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = unit(rng);
    std::vector<Edge> list;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (unit(rng) < density) list.push_back({u, v});
    std::vector<Weight> w(n);
    for (auto& x : w) x = 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(max_weight));
    return WeightedGraph::from_edges(n, list, std::move(w));
}

Alpha random_alpha(Rng& rng) {
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 8);
    const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
    return Alpha(p, q);
}

bool naive_feasible(const WeightedGraph& g, Alpha alpha, const std::vector<bool>& in_set) {
    const std::size_t n = g.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
        std::int64_t closed = 1;
        std::int64_t covered = in_set[v] ? 1 : 0;
        for (VertexId u = 0; u < n; ++u) {
            if (u == v || !g.has_edge(u, v)) continue;
            ++closed;
            if (in_set[u]) ++covered;
        }
        // covered >= ceil(p*closed/q)  <=>  q*covered >= p*closed
        if (alpha.denominator() * covered < alpha.numerator() * closed) return false;
    }
    return true;
}

Weight naive_opt(const WeightedGraph& g, Alpha alpha) {
    const std::size_t n = g.num_vertices();
    if (n > 20) throw std::invalid_argument("naive_opt: too many vertices");
    Weight best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> in(n);
        Weight w = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) {
                in[v] = true;
                w += g.weight(static_cast<VertexId>(v));
            }
        if ((best < 0 || w < best) && naive_feasible(g, alpha, in)) best = w;
    }
    return best;
}

double sign_test_p(std::size_t wins, std::size_t losses) {
    const std::size_t n = wins + losses;
    double p = 0.0;
    for (std::size_t k = wins; k <= n; ++k)
        p += std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) - n * std::log(2.0));
    return std::min(1.0, p);
}

}  // namespace alphadom::testing
