#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alphadom/graph.hpp"
#include "alphadom/lp.hpp"
#include "alphadom/random.hpp"

namespace alphadom {

struct RoundingConfig {
    /// r ~ U(0, threshold_upper); vertex i is taken iff r < x̂_i.
    double threshold_upper = 0.5;
    /// Unset means ⌈log₂ Δ⌉, clamped to at least 1.
    std::optional<std::size_t> max_rounds;
    Seed seed = 0;

    void validate() const;
};

/// ⌈log₂ Δ⌉ with Δ ≤ 2 mapping to 1.
std::size_t default_rounds(const WeightedGraph& g);
std::size_t effective_rounds(const RoundingConfig& cfg, const WeightedGraph& g);

/// One independent rounding pass over `x` (values in [0,1]).
std::vector<VertexId> round_once(std::span<const double> x, double threshold_upper, Rng& rng);

/// For every violated vertex in ascending order, add its `shortfall`
/// lightest non-members of N[v] (ties by index). Output is feasible.
DominatingSet repair(const DominationInstance& inst, DominatingSet d);

struct RoundingTrace {
    std::size_t rounds_used = 0;
    bool feasible_before_repair = false;
    std::size_t added_by_repair = 0;
};

/// LP relaxation + amplified randomized rounding + repair. The LP is solved
/// once and x̂ reused across rounds; rounding stops early once the union is
/// feasible.
DominatingSet alg_rr(const DominationInstance& inst, const RoundingConfig& cfg, RoundingTrace* trace = nullptr);

/// Same, reusing a precomputed LP solution for `inst`.
DominatingSet alg_rr(const DominationInstance& inst, const FractionalSolution& lp_solution,
                     const RoundingConfig& cfg, RoundingTrace* trace = nullptr);

}  // namespace alphadom
