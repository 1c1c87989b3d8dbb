#include "alphadom/community.hpp"

#include <algorithm>
#include <limits>

#include "alphadom/error.hpp"

namespace alphadom {

Partition::Partition(std::vector<std::uint32_t> community_of) : community_of_(std::move(community_of)) {
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t max_id = 0;
    for (auto c : community_of_) max_id = std::max(max_id, c);
    std::vector<std::uint32_t> relabel(community_of_.empty() ? 0 : std::size_t{max_id} + 1, kUnset);
    std::uint32_t next = 0;
    for (auto& c : community_of_) {
        if (relabel[c] == kUnset) relabel[c] = next++;
        c = relabel[c];
    }
    k_ = next;
}

std::vector<std::vector<VertexId>> Partition::members() const {
    std::vector<std::vector<VertexId>> out(k_);
    for (VertexId v = 0; v < community_of_.size(); ++v) out[community_of_[v]].push_back(v);
    return out;
}

double modularity(const WeightedGraph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices()) throw InputError("partition does not cover the graph");
    const auto m = static_cast<WideInt>(g.num_edges());
    if (m == 0) return 0.0;
    std::vector<std::int64_t> internal(p.num_communities(), 0), degree(p.num_communities(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto c = p.community_of(v);
        degree[c] += static_cast<std::int64_t>(g.degree(v));
        for (VertexId u : g.neighbors(v))
            if (v < u && p.community_of(u) == c) ++internal[c];
    }
    WideInt numerator = 0;
    for (std::size_t c = 0; c < internal.size(); ++c)
        numerator += 4 * m * internal[c] - static_cast<WideInt>(degree[c]) * degree[c];
    return static_cast<double>(static_cast<long double>(numerator) / static_cast<long double>(4 * m * m));
}

namespace {

// Weighted multigraph for one Louvain level. Adjacency is symmetric and
// excludes self-loops, which are kept separately as internal edge weight.
struct LevelGraph {
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj;
    std::vector<std::int64_t> self_loops;

    std::size_t size() const { return adj.size(); }
    std::int64_t degree(std::size_t i) const {
        std::int64_t k = 2 * self_loops[i];
        for (const auto& [j, w] : adj[i]) k += w;
        return k;
    }
};

// Returns the community of each node after local moving, and whether any
// node moved.
bool local_moves(const LevelGraph& lg, std::vector<std::uint32_t>& comm) {
    const std::size_t n = lg.size();
    std::vector<std::int64_t> k(n), tot(n);
    std::int64_t two_m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = lg.degree(i);
        two_m += k[i];
    }
    comm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        comm[i] = static_cast<std::uint32_t>(i);
        tot[i] = k[i];
    }
    if (two_m == 0) return false;

    std::vector<std::int64_t> link(n, 0);
    std::vector<std::uint32_t> touched;
    bool any_move = false;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t old_c = comm[i];
            touched.clear();
            for (const auto& [j, w] : lg.adj[i]) {
                if (link[comm[j]] == 0) touched.push_back(comm[j]);
                link[comm[j]] += w;
            }
            tot[old_c] -= k[i];
            // Gains scaled by 2m: 2m·k_{i,c} − tot_c·k_i, exact in integers.
            const auto gain = [&](std::uint32_t c) {
                return static_cast<WideInt>(two_m) * link[c] - static_cast<WideInt>(tot[c]) * k[i];
            };
            const WideInt stay = gain(old_c);
            std::uint32_t best_c = old_c;
            WideInt best = stay;
            std::sort(touched.begin(), touched.end());
            bool have_alt = false;
            std::uint32_t alt_c = 0;
            WideInt alt = 0;
            for (auto c : touched) {
                if (c == old_c) continue;
                const WideInt gc = gain(c);
                if (!have_alt || gc > alt) {
                    alt = gc;
                    alt_c = c;
                    have_alt = true;
                }
            }
            if (have_alt && alt > best) {
                best = alt;
                best_c = alt_c;
            }
            tot[best_c] += k[i];
            comm[i] = best_c;
            if (best_c != old_c) moved = any_move = true;
            for (auto c : touched) link[c] = 0;
        }
    }
    return any_move;
}

}  // namespace

LouvainResult louvain_detailed(const WeightedGraph& g) {
    const std::size_t n = g.num_vertices();
    LevelGraph lg;
    lg.adj.resize(n);
    lg.self_loops.assign(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : g.neighbors(v)) lg.adj[v].emplace_back(u, 1);

    std::vector<std::uint32_t> node_of(n);  // original vertex -> current level node
    for (VertexId v = 0; v < n; ++v) node_of[v] = v;

    LouvainResult result;
    std::vector<std::uint32_t> comm;
    while (local_moves(lg, comm)) {
        // Canonical renumbering: by first appearance in node order.
        Partition level(comm);
        const std::size_t k = level.num_communities();
        for (auto& x : node_of) x = level.community_of(x);

        LevelGraph next;
        next.adj.resize(k);
        next.self_loops.assign(k, 0);
        std::vector<std::int64_t> internal_twice(k, 0);
        std::vector<std::int64_t> acc(k, 0);
        std::vector<std::uint32_t> touched;
        const auto members = level.members();
        for (std::uint32_t c = 0; c < k; ++c) {
            touched.clear();
            for (auto i : members[c]) {
                next.self_loops[c] += lg.self_loops[i];
                for (const auto& [j, w] : lg.adj[i]) {
                    const auto cj = level.community_of(j);
                    if (cj == c) {
                        internal_twice[c] += w;
                    } else {
                        if (acc[cj] == 0) touched.push_back(cj);
                        acc[cj] += w;
                    }
                }
            }
            next.self_loops[c] += internal_twice[c] / 2;
            std::sort(touched.begin(), touched.end());
            for (auto cj : touched) {
                next.adj[c].emplace_back(cj, acc[cj]);
                acc[cj] = 0;
            }
        }
        lg = std::move(next);
        result.level_modularity.push_back(modularity(g, Partition(node_of)));
        if (lg.size() == 1) break;
    }
    result.partition = Partition(node_of);
    return result;
}

Partition louvain(const WeightedGraph& g, Seed /*seed*/) { return louvain_detailed(g).partition; }

// ---------------------------------------------------------------------------

DominatingSet alg_rrwc(const DominationInstance& inst, const RoundingConfig& cfg, RrwcTrace* trace) {
    return alg_rrwc(inst, louvain(inst.graph(), cfg.seed), cfg, trace);
}

DominatingSet alg_rrwc(const DominationInstance& inst, const Partition& partition, const RoundingConfig& cfg,
                       RrwcTrace* trace) {
    cfg.validate();
    const WeightedGraph& g = inst.graph();
    if (partition.num_vertices() != g.num_vertices()) throw InputError("partition does not cover the graph");

    Rng rng(cfg.seed);
    const std::size_t rounds = effective_rounds(cfg, g);
    DominatingSet d(g);

    for (const auto& members : partition.members()) {
        if (members.size() == 1) {
            d.insert(members.front());
            continue;
        }
        const DominationInstance local(g.induced_subgraph(members), inst.alpha());
        const FractionalSolution x = solve(build_lp(local));

        const WeightedGraph& lg = local.graph();
        std::vector<std::int64_t> coverage(members.size(), 0);
        std::size_t violated = members.size();
        std::vector<char> taken(members.size(), 0);
        auto add_local = [&](VertexId i) {
            if (taken[i]) return;
            taken[i] = 1;
            d.insert(members[i]);
            if (++coverage[i] == local.demand(i)) --violated;
            for (VertexId j : lg.neighbors(i))
                if (++coverage[j] == local.demand(j)) --violated;
        };
        for (std::size_t used = 0; used < rounds && violated > 0; ++used)
            for (VertexId i : round_once(x.values, cfg.threshold_upper, rng)) add_local(i);
    }

    const bool feasible = is_feasible(inst, d);
    const std::size_t before = d.size();
    DominatingSet out = feasible ? std::move(d) : repair(inst, std::move(d));
    if (trace) *trace = {partition.num_communities(), feasible, out.size() - before};
    return out;
}

}  // namespace alphadom
