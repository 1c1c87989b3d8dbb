#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "alphadom/graph.hpp"

namespace alphadom {

/// Candidate ordering used when the greedy pass tops up a violated vertex.
///   ByWeight            w_v
///   ByWeightPerDegree   w_v / d̄_v
///   ByNeighborhoodShare w_v / w_{N[v]}   (closed neighborhood)
enum class Strategy { ByWeight, ByWeightPerDegree, ByNeighborhoodShare };

std::string_view to_string(Strategy s);

/// Exact rational key; ordered by value, then by vertex index.
struct SortKey {
    Weight numerator;
    Weight denominator;
    VertexId vertex;

    friend bool operator<(const SortKey& a, const SortKey& b) {
        const WideInt lhs = static_cast<WideInt>(a.numerator) * b.denominator;
        const WideInt rhs = static_cast<WideInt>(b.numerator) * a.denominator;
        if (lhs != rhs) return lhs < rhs;
        return a.vertex < b.vertex;
    }
    friend bool operator==(const SortKey&, const SortKey&) = default;
};

SortKey sort_key(Strategy strategy, const WeightedGraph& g, VertexId v);

/// Greedy construction: walk the vertices in index order; whenever
/// |N[v] ∩ D| < demand(v), add the demand(v) − r best-keyed vertices of
/// N[v] \ D. Deterministic; always feasible.
DominatingSet greedy_dominate(const DominationInstance& inst, Strategy strategy);

}  // namespace alphadom
