#include "alphadom/greedy.hpp"

#include <algorithm>

namespace alphadom {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::ByWeight: return "greedy-s1";
        case Strategy::ByWeightPerDegree: return "greedy-s2";
        case Strategy::ByNeighborhoodShare: return "greedy-s3";
    }
    return "?";
}

SortKey sort_key(Strategy strategy, const WeightedGraph& g, VertexId v) {
    const Weight w = g.weight(v);
    switch (strategy) {
        case Strategy::ByWeight: return {w, 1, v};
        case Strategy::ByWeightPerDegree: return {w, static_cast<Weight>(closed_degree(g, v)), v};
        case Strategy::ByNeighborhoodShare: return {w, closed_neighborhood_weight(g, v), v};
    }
    return {w, 1, v};
}

DominatingSet greedy_dominate(const DominationInstance& inst, Strategy strategy) {
    const WeightedGraph& g = inst.graph();
    const std::size_t n = g.num_vertices();

    std::vector<SortKey> keys;
    keys.reserve(n);
    for (VertexId v = 0; v < n; ++v) keys.push_back(sort_key(strategy, g, v));

    DominatingSet d(g);
    std::vector<std::int64_t> coverage(n, 0);
    auto add = [&](VertexId u) {
        d.insert(u);
        ++coverage[u];
        for (VertexId x : g.neighbors(u)) ++coverage[x];
    };

    // Coverage only grows, so once a vertex is satisfied it stays satisfied:
    // a single ascending sweep finds the same sequence of violated vertices
    // as rescanning from index 0 after every fix.
    std::vector<SortKey> candidates;
    for (VertexId v = 0; v < n; ++v) {
        const std::int64_t r = coverage[v];
        const std::int64_t need = inst.demand(v);
        if (r >= need) continue;
        candidates.clear();
        if (!d.contains(v)) candidates.push_back(keys[v]);
        for (VertexId u : g.neighbors(v))
            if (!d.contains(u)) candidates.push_back(keys[u]);
        const auto take = static_cast<std::size_t>(need - r);
        std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                          candidates.end());
        for (std::size_t i = 0; i < take; ++i) add(candidates[i].vertex);
    }
    return d;
}

}  // namespace alphadom
