#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <queue>

#include "alphadom/error.hpp"
#include "alphadom/generators.hpp"

using namespace alphadom;

namespace {

std::size_t count_components(const WeightedGraph& g) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::size_t components = 0;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
    }
    return components;
}

}  // namespace

TEST(Gnm, TriangleAndEmpty) {
    auto k3 = gen_gnm(3, 3, 9);
    EXPECT_EQ(k3.num_edges(), 3u);
    EXPECT_TRUE(k3.has_edge(0, 1) && k3.has_edge(1, 2) && k3.has_edge(0, 2));
    auto empty = gen_gnm(4, 0, 9);
    EXPECT_EQ(empty.num_vertices(), 4u);
    EXPECT_EQ(empty.num_edges(), 0u);
    EXPECT_EQ(max_degree(empty), 0u);
}

TEST(Gnm, ExactEdgeCountSparseAndDense) {
    for (Seed s = 0; s < 20; ++s) {
        EXPECT_EQ(gen_gnm(40, 100, s).num_edges(), 100u);
        EXPECT_EQ(gen_gnm(40, 700, s).num_edges(), 700u);  // complement path
        EXPECT_EQ(gen_gnm(40, 780, s).num_edges(), 780u);  // complete
    }
}

TEST(Gnm, RejectsTooManyEdges) { EXPECT_THROW(gen_gnm(4, 7, 0), InputError); }

TEST(Gnm, Deterministic) {
    EXPECT_EQ(gen_gnm(200, 1000, 42), gen_gnm(200, 1000, 42));
    EXPECT_NE(gen_gnm(200, 1000, 42), gen_gnm(200, 1000, 43));
}

TEST(Gnm, DeskScaleErMatchesReferenceShape) {
    // Reference ER family: 5000 vertices, 50000 edges, one component, max degree 38.
    double mean_max = 0.0;
    for (Seed s = 1; s <= 3; ++s) {
        auto g = gen_gnm(5000, 50000, s);
        EXPECT_EQ(g.num_edges(), 50000u);
        EXPECT_LE(count_components(g), 2u);
        mean_max += static_cast<double>(max_degree(g)) / 3.0;
    }
    EXPECT_NEAR(mean_max, 38.0, 4.0);
}

TEST(PowerlawCluster, SeedGraphIsComplete) {
    auto g = gen_powerlaw_cluster(5, 4, 0.3, 1);
    EXPECT_EQ(g.num_edges(), 10u);
}

TEST(PowerlawCluster, RejectsBadParameters) {
    EXPECT_THROW(gen_powerlaw_cluster(5, 0, 0.5, 0), InputError);
    EXPECT_THROW(gen_powerlaw_cluster(3, 3, 0.5, 0), InputError);
    EXPECT_THROW(gen_powerlaw_cluster(30, 3, 1.5, 0), InputError);
}

TEST(PowerlawCluster, WithoutTriadsEveryNewVertexAddsExactlyK) {
    // Pure preferential attachment never collapses attachments.
    const std::size_t n = 300, k = 3;
    auto g = gen_powerlaw_cluster(n, k, 0.0, 5);
    EXPECT_EQ(g.num_edges(), k * (k + 1) / 2 + (n - k - 1) * k);
}

TEST(PowerlawCluster, EdgeCountNearReference) {
    // Reference PN family: 49847 edges at n = 5000, 10 attachments, p = 0.8.
    double mean = 0.0;
    for (Seed s = 1; s <= 3; ++s) mean += static_cast<double>(gen_powerlaw_cluster(5000, 10, 0.8, s).num_edges()) / 3;
    EXPECT_NEAR(mean, 49847.0, 150.0);
    EXPECT_LT(mean, 50000.0);
}

TEST(PowerlawCluster, HeavierTailThanGnm) {
    double pn = 0.0, er = 0.0;
    for (Seed s = 0; s < 30; ++s) {
        auto g = gen_powerlaw_cluster(500, 5, 0.5, s);
        pn += static_cast<double>(max_degree(g));
        er += static_cast<double>(max_degree(gen_gnm(500, g.num_edges(), s)));
    }
    EXPECT_GT(pn / 30, er / 30);
}

TEST(PowerlawCluster, Deterministic) {
    EXPECT_EQ(gen_powerlaw_cluster(400, 4, 0.7, 11), gen_powerlaw_cluster(400, 4, 0.7, 11));
}

TEST(PlantedPartition, TwoTriangles) {
    auto gen = gen_planted_partition(2, 3, 1.0, 0.0, 3);
    EXPECT_EQ(gen.graph.num_edges(), 6u);
    EXPECT_EQ(count_components(gen.graph), 2u);
    EXPECT_EQ(gen.ground_truth, (std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1}));
}

TEST(PlantedPartition, NoInterEdgesWhenPOutZero) {
    auto gen = gen_planted_partition(5, 40, 0.5, 0.0, 8);
    for (const Edge& e : gen.graph.edges()) EXPECT_EQ(gen.ground_truth[e.u], gen.ground_truth[e.v]);
    EXPECT_EQ(count_components(gen.graph), 5u);
}

TEST(PlantedPartition, EdgeCountsWithinFourSigma) {
    const std::size_t blocks = 4, size = 30;
    const double p_in = 0.3, p_out = 0.05;
    const double intra_pairs = blocks * size * (size - 1) / 2.0;
    const double inter_pairs = (blocks * size) * (blocks * size - 1) / 2.0 - intra_pairs;
    const double sd_in = std::sqrt(intra_pairs * p_in * (1 - p_in));
    const double sd_out = std::sqrt(inter_pairs * p_out * (1 - p_out));
    double total_in = 0, total_out = 0;
    for (Seed s = 0; s < 100; ++s) {
        auto gen = gen_planted_partition(blocks, size, p_in, p_out, s);
        double in = 0, out = 0;
        for (const Edge& e : gen.graph.edges()) (gen.ground_truth[e.u] == gen.ground_truth[e.v] ? in : out) += 1;
        EXPECT_LE(std::abs(in - intra_pairs * p_in), 4 * sd_in);
        EXPECT_LE(std::abs(out - inter_pairs * p_out), 4 * sd_out);
        total_in += in;
        total_out += out;
    }
    EXPECT_LE(std::abs(total_in / 100 - intra_pairs * p_in), 4 * sd_in / 10);
    EXPECT_LE(std::abs(total_out / 100 - inter_pairs * p_out), 4 * sd_out / 10);
}

TEST(PlantedPartition, RejectsBadParameters) {
    EXPECT_THROW(gen_planted_partition(0, 3, 0.5, 0.1, 0), InputError);
    EXPECT_THROW(gen_planted_partition(2, 3, -0.1, 0.1, 0), InputError);
}

TEST(AssignWeights, RangeMeanAndDeterminism) {
    auto g = gen_gnm(20000, 0, 1);
    auto w = assign_weights(g, {1, 71}, 5);
    double mean = 0.0;
    for (Weight x : w.weights()) {
        ASSERT_GE(x, 1);
        ASSERT_LE(x, 71);
        mean += static_cast<double>(x);
    }
    mean /= 20000.0;
    EXPECT_NEAR(mean, 36.0, 0.5);
    EXPECT_EQ(w, assign_weights(g, {1, 71}, 5));
    auto fives = assign_weights(g, {5, 5}, 99);
    for (Weight x : fives.weights()) ASSERT_EQ(x, 5);
}

TEST(AssignWeights, WeightsIndependentOfStructureStream) {
    // Same seed for structure and weights must not reuse draws.
    auto g = gen_gnm(50, 100, 7);
    auto a = assign_weights(g, {1, 71}, 7);
    auto b = assign_weights(gen_gnm(50, 10, 7), {1, 71}, 7);
    EXPECT_TRUE(std::equal(a.weights().begin(), a.weights().end(), b.weights().begin()));
    EXPECT_THROW(assign_weights(g, {0, 5}, 1), InputError);
    EXPECT_THROW(assign_weights(g, {6, 5}, 1), InputError);
}

TEST(Generate, DispatchesOnSpec) {
    EXPECT_EQ(generate(GnmSpec{10, 5}, 1).graph, gen_gnm(10, 5, 1));
    auto plp = generate(PlantedPartitionSpec{2, 3, 1.0, 0.0}, 1);
    EXPECT_EQ(plp.ground_truth.size(), 6u);
}
