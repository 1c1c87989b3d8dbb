#include "alphadom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "alphadom/error.hpp"

namespace alphadom {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError(std::string(name) + " must lie in [0, 1]");
}

std::vector<Weight> unit_weights(std::size_t n) { return std::vector<Weight>(n, 1); }

}  // namespace

WeightedGraph gen_gnm(std::size_t n, std::size_t m, Seed seed) {
    const std::uint64_t max_edges = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > max_edges)
        throw InputError("G(n,m): m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(max_edges));
    Rng rng(derive_seed(seed, {kStreamGnm}));

    // Rejection-sample the smaller of the edge set and its complement.
    const bool complement = m > max_edges / 2;
    const std::size_t target = complement ? max_edges - m : m;
    std::uniform_int_distribution<VertexId> pick(0, n == 0 ? 0 : static_cast<VertexId>(n - 1));
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(target * 2);
    std::vector<Edge> sampled;
    sampled.reserve(target);
    while (sampled.size() < target) {
        VertexId a = pick(rng);
        VertexId b = pick(rng);
        if (a == b) continue;
        if (chosen.insert(pair_key(a, b)).second) sampled.push_back({std::min(a, b), std::max(a, b)});
    }

    std::vector<Edge> edges;
    if (!complement) {
        edges = std::move(sampled);
    } else {
        edges.reserve(m);
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (!chosen.contains(pair_key(a, b))) edges.push_back({a, b});
    }
    return WeightedGraph::from_edges(n, edges, unit_weights(n));
}

WeightedGraph gen_powerlaw_cluster(std::size_t n, std::size_t edges_per_new_vertex, double triangle_prob,
                                   Seed seed) {
    const std::size_t k = edges_per_new_vertex;
    if (k < 1) throw InputError("powerlaw-cluster: edges_per_new_vertex must be >= 1");
    if (n <= k) throw InputError("powerlaw-cluster: n must exceed edges_per_new_vertex");
    check_probability(triangle_prob, "triangle_prob");
    Rng rng(derive_seed(seed, {kStreamPowerlaw}));
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<std::vector<VertexId>> adj(n);
    auto connected = [&](VertexId a, VertexId b) {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    auto connect = [&](VertexId a, VertexId b) {
        if (a == b || connected(a, b)) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
        return true;
    };

    // Seed: complete graph on the first k+1 vertices. `repeated` holds every
    // vertex once per incident edge, so uniform draws from it are
    // degree-proportional.
    std::vector<VertexId> repeated;
    for (VertexId a = 0; a <= k; ++a)
        for (VertexId b = a + 1; b <= k; ++b) {
            connect(a, b);
            repeated.push_back(a);
            repeated.push_back(b);
        }

    std::vector<VertexId> candidates;
    for (VertexId source = static_cast<VertexId>(k + 1); source < n; ++source) {
        // k distinct preferential-attachment targets, consumed in draw order.
        std::vector<VertexId> targets;
        while (targets.size() < k) {
            std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
            VertexId t = repeated[pick(rng)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        std::size_t next_target = 0;
        VertexId target = targets[next_target++];
        std::vector<VertexId> added;
        if (connect(source, target)) added.push_back(target);
        std::size_t count = 1;
        while (count < k) {
            if (coin(rng) < triangle_prob) {
                candidates.clear();
                for (VertexId nbr : adj[target])
                    if (nbr != source && !connected(source, nbr)) candidates.push_back(nbr);
                std::sort(candidates.begin(), candidates.end());
                if (!candidates.empty()) {
                    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                    VertexId nbr = candidates[pick(rng)];
                    connect(source, nbr);
                    added.push_back(nbr);
                    ++count;
                    continue;
                }
            }
            // A target already reached by triad closure collapses into the
            // existing edge; the attachment still counts.
            target = targets[next_target++];
            if (connect(source, target)) added.push_back(target);
            ++count;
        }
        for (VertexId t : added) {
            repeated.push_back(t);
            repeated.push_back(source);
        }
    }

    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return WeightedGraph(adj, unit_weights(n));
}

GeneratedGraph gen_planted_partition(std::size_t blocks, std::size_t block_size, double p_in, double p_out,
                                     Seed seed) {
    if (blocks < 1 || block_size < 1) throw InputError("planted partition: blocks and block_size must be >= 1");
    check_probability(p_in, "p_in");
    check_probability(p_out, "p_out");
    const std::size_t n = blocks * block_size;
    Rng rng(derive_seed(seed, {kStreamPlanted}));
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<std::uint32_t> block_of(n);
    for (std::size_t v = 0; v < n; ++v) block_of[v] = static_cast<std::uint32_t>(v / block_size);

    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            const double p = block_of[a] == block_of[b] ? p_in : p_out;
            if (coin(rng) < p) edges.push_back({a, b});
        }
    return {WeightedGraph::from_edges(n, edges, unit_weights(n)), std::move(block_of)};
}

GeneratedGraph generate(const GenSpec& spec, Seed seed) {
    return std::visit(
        [seed](const auto& s) -> GeneratedGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GnmSpec>) {
                return {gen_gnm(s.n, s.m, seed), {}};
            } else if constexpr (std::is_same_v<T, PowerlawClusterSpec>) {
                return {gen_powerlaw_cluster(s.n, s.edges_per_new_vertex, s.triangle_prob, seed), {}};
            } else {
                return gen_planted_partition(s.blocks, s.block_size, s.p_in, s.p_out, seed);
            }
        },
        spec);
}

WeightedGraph assign_weights(const WeightedGraph& g, const WeightSpec& spec, Seed seed) {
    if (spec.min < 1 || spec.max < spec.min) throw InputError("weight range must satisfy 1 <= min <= max");
    Rng rng(derive_seed(seed, {kStreamWeights}));
    std::uniform_int_distribution<Weight> pick(spec.min, spec.max);
    std::vector<Weight> w(g.num_vertices());
    for (auto& x : w) x = pick(rng);
    return g.with_weights(std::move(w));
}

}  // namespace alphadom
