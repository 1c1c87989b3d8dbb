#include "alphadom/rounding.hpp"

#include <algorithm>

#include "alphadom/error.hpp"

namespace alphadom {

void RoundingConfig::validate() const {
    if (!(threshold_upper > 0.0 && threshold_upper <= 1.0)) throw InputError("threshold_upper must lie in (0, 1]");
    if (max_rounds && *max_rounds < 1) throw InputError("max_rounds must be >= 1");
}

std::size_t default_rounds(const WeightedGraph& g) {
    const std::size_t delta = max_degree(g);
    std::size_t t = 0;
    while ((std::size_t{1} << t) < delta) ++t;
    return std::max<std::size_t>(t, 1);
}

std::size_t effective_rounds(const RoundingConfig& cfg, const WeightedGraph& g) {
    return cfg.max_rounds ? *cfg.max_rounds : default_rounds(g);
}

std::vector<VertexId> round_once(std::span<const double> x, double threshold_upper, Rng& rng) {
    std::uniform_real_distribution<double> draw(0.0, threshold_upper);
    std::vector<VertexId> picked;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (draw(rng) < x[i]) picked.push_back(static_cast<VertexId>(i));
    return picked;
}

namespace {

// Incremental |N[v] ∩ D| bookkeeping with a running count of violated vertices.
class CoverageTracker {
public:
    explicit CoverageTracker(const DominationInstance& inst)
        : inst_(inst), coverage_(inst.num_vertices(), 0), violated_(inst.num_vertices()) {}

    void add(VertexId u) {
        bump(u);
        for (VertexId x : inst_.graph().neighbors(u)) bump(x);
    }

    std::int64_t coverage(VertexId v) const { return coverage_[v]; }
    bool feasible() const { return violated_ == 0; }

private:
    void bump(VertexId v) {
        if (++coverage_[v] == inst_.demand(v)) --violated_;
    }

    const DominationInstance& inst_;
    std::vector<std::int64_t> coverage_;
    std::size_t violated_;
};

}  // namespace

DominatingSet repair(const DominationInstance& inst, DominatingSet d) {
    const WeightedGraph& g = inst.graph();
    if (d.universe_size() != g.num_vertices()) throw InputError("repair: set belongs to a different graph");
    CoverageTracker cov(inst);
    for (VertexId v : d.members()) cov.add(v);

    std::vector<VertexId> candidates;
    auto lighter = [&g](VertexId a, VertexId b) {
        return g.weight(a) != g.weight(b) ? g.weight(a) < g.weight(b) : a < b;
    };
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::int64_t shortfall = inst.demand(v) - cov.coverage(v);
        if (shortfall <= 0) continue;
        candidates.clear();
        if (!d.contains(v)) candidates.push_back(v);
        for (VertexId u : g.neighbors(v))
            if (!d.contains(u)) candidates.push_back(u);
        const auto take = static_cast<std::size_t>(shortfall);
        std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take), candidates.end(),
                          lighter);
        for (std::size_t i = 0; i < take; ++i) {
            d.insert(candidates[i]);
            cov.add(candidates[i]);
        }
    }
    return d;
}

DominatingSet alg_rr(const DominationInstance& inst, const RoundingConfig& cfg, RoundingTrace* trace) {
    cfg.validate();
    const FractionalSolution sol = solve(build_lp(inst));
    return alg_rr(inst, sol, cfg, trace);
}

DominatingSet alg_rr(const DominationInstance& inst, const FractionalSolution& lp_solution, const RoundingConfig& cfg,
                     RoundingTrace* trace) {
    cfg.validate();
    const WeightedGraph& g = inst.graph();
    if (lp_solution.values.size() != g.num_vertices()) throw InputError("LP solution size does not match instance");

    Rng rng(cfg.seed);
    const std::size_t rounds = effective_rounds(cfg, g);
    DominatingSet d(g);
    CoverageTracker cov(inst);
    std::size_t used = 0;
    while (used < rounds && !cov.feasible()) {
        for (VertexId v : round_once(lp_solution.values, cfg.threshold_upper, rng))
            if (d.insert(v)) cov.add(v);
        ++used;
    }
    const bool feasible = cov.feasible();
    const std::size_t before = d.size();
    DominatingSet out = feasible ? std::move(d) : repair(inst, std::move(d));
    if (trace) *trace = {used, feasible, out.size() - before};
    return out;
}

}  // namespace alphadom
