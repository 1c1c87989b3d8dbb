#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "alphadom/error.hpp"
#include "alphadom/oracle.hpp"
#include "test_support.hpp"

using namespace alphadom;
using alphadom::testing::complete_graph;
using alphadom::testing::make_graph;
using alphadom::testing::path_graph;

namespace {

// P(X >= k) by summing over every outcome vector.
double enumerated_tail(const std::vector<double>& p, std::int64_t k) {
    const std::size_t n = p.size();
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double prob = 1.0;
        std::int64_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool on = (mask >> i) & 1u;
            prob *= on ? p[i] : 1.0 - p[i];
            hits += on;
        }
        if (hits >= k) total += prob;
    }
    return total;
}

}  // namespace

TEST(BruteForce, PathOptimum) {
    DominationInstance inst(path_graph({5, 1, 3}), Alpha(1, 2));
    auto r = brute_force_opt(inst);
    EXPECT_EQ(r.opt_weight, 4);
    EXPECT_EQ(r.opt_set.members(), (std::vector<VertexId>{1, 2}));
}

TEST(BruteForce, ForcedAndTrivialCases) {
    DominationInstance k3(complete_graph({3, 8, 4}), Alpha(1, 1));
    EXPECT_EQ(brute_force_opt(k3).opt_weight, 15);
    DominationInstance single(make_graph({9}, {}), Alpha(1, 4));
    EXPECT_EQ(brute_force_opt(single).opt_weight, 9);
}

TEST(BruteForce, TieBreakPrefersFewerThenLexicographic) {
    // Isolated vertex 0 (weight 2) and edge 1-2 (weights 1, 1) at α = 1/2:
    // every feasible set holds 0 and one of {1, 2}; {0,1} wins the tie.
    DominationInstance pair(make_graph({2, 1, 1}, {{1, 2}}), Alpha(1, 2));
    EXPECT_EQ(brute_force_opt(pair).opt_set.members(), (std::vector<VertexId>{0, 1}));
    DominationInstance even(complete_graph({1, 1, 1}), Alpha(1, 3));
    EXPECT_EQ(brute_force_opt(even).opt_set.members(), (std::vector<VertexId>{0}));
    // Star with center 2 at α = 1/3: {2} and {0,1} both weigh 2; the single vertex wins.
    DominationInstance star(make_graph({1, 1, 2}, {{0, 2}, {1, 2}}), Alpha(1, 3));
    EXPECT_EQ(brute_force_opt(star).opt_set.members(), (std::vector<VertexId>{2}));
}

TEST(BruteForce, RefusesLargeInstances) {
    DominationInstance inst(make_graph(std::vector<Weight>(23, 1), {}), Alpha(1, 2));
    EXPECT_THROW(brute_force_opt(inst), InstanceTooLarge);
}

TEST(BruteForce, AgreesWithPlainEnumeration) {
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = alphadom::testing::random_graph(rng, 13, 71);
        DominationInstance inst(g, alphadom::testing::random_alpha(rng));
        auto r = brute_force_opt(inst);
        ASSERT_TRUE(is_feasible(inst, r.opt_set));
        ASSERT_EQ(r.opt_set.total_weight(), r.opt_weight);
        ASSERT_EQ(r.opt_weight, alphadom::testing::naive_opt(g, inst.alpha()));
    }
}

TEST(PoissonBinomial, Examples) {
    const std::vector<double> ones{1, 1}, halves{0.5, 0.5, 0.5};
    EXPECT_DOUBLE_EQ(poisson_binomial_tail(ones, 2), 1.0);
    EXPECT_DOUBLE_EQ(poisson_binomial_tail(halves, 2), 0.5);
    EXPECT_DOUBLE_EQ(poisson_binomial_tail(halves, 0), 1.0);
    EXPECT_DOUBLE_EQ(poisson_binomial_tail(halves, -3), 1.0);
    EXPECT_DOUBLE_EQ(poisson_binomial_tail(halves, 4), 0.0);
    auto pmf = poisson_binomial_pmf(halves);
    ASSERT_EQ(pmf.size(), 4u);
    EXPECT_DOUBLE_EQ(pmf[0], 0.125);
    EXPECT_DOUBLE_EQ(pmf[1], 0.375);
}

TEST(PoissonBinomial, MatchesEnumerationAndIsMonotone) {
    Rng rng(72);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> p(1 + rng() % 12);
        for (double& x : p) x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        auto pmf = poisson_binomial_pmf(p);
        ASSERT_NEAR(std::accumulate(pmf.begin(), pmf.end(), 0.0), 1.0, 1e-12);
        double prev = 1.0;
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(p.size()) + 1; ++k) {
            const double tail = poisson_binomial_tail(p, k);
            ASSERT_NEAR(tail, enumerated_tail(p, k), 1e-12);
            ASSERT_LE(tail, prev + 1e-15);
            prev = tail;
        }
    }
}

TEST(TailAtMean, Examples) {
    const std::vector<double> one{1.0}, halves{0.5, 0.5};
    EXPECT_TRUE(check_tail_at_mean(one, 1));
    EXPECT_TRUE(check_tail_at_mean(halves, 1));
    // Binomial(5, 0.6) at its mean: P(X >= 3) ~ 0.683.
    const std::vector<double> p(5, 0.6);
    EXPECT_NEAR(poisson_binomial_tail(p, 3), 0.68256, 1e-9);
    EXPECT_TRUE(check_tail_at_mean(p, 3));
}

TEST(TailAtMean, RandomVectorsWithIntegralMean) {
    Rng rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> p(1 + rng() % 30);
        for (double& x : p) x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const double sum = std::accumulate(p.begin(), p.end(), 0.0);
        const auto k = static_cast<std::int64_t>(std::floor(sum));
        if (k < 1) continue;
        ASSERT_TRUE(check_tail_at_mean(p, k));
        ASSERT_GE(poisson_binomial_tail(p, k), 0.5);
    }
}

TEST(ExactBasis, RejectsMalformedBasis) {
    auto lp = build_lp(DominationInstance(complete_graph({2, 7}), Alpha(1, 2)));
    auto sol = solve(lp);
    auto good = verify_basis_exact(lp, sol.basis);
    EXPECT_TRUE(good.nonsingular && good.primal_feasible && good.dual_feasible);
    EXPECT_EQ(good.objective_exact, "2");
    // Heavy vertex basic, light vertex at zero: feasible but not optimal.
    Basis heavy{{1, 3}, {VarStatus::AtLower, VarStatus::Basic, VarStatus::AtLower, VarStatus::Basic}};
    auto check = verify_basis_exact(lp, heavy);
    EXPECT_TRUE(check.nonsingular);
    EXPECT_TRUE(check.primal_feasible);
    EXPECT_FALSE(check.dual_feasible);
    EXPECT_EQ(check.objective_exact, "7");
    // Both surpluses basic leaves every row short.
    Basis slack{{2, 3}, {VarStatus::AtLower, VarStatus::AtLower, VarStatus::Basic, VarStatus::Basic}};
    EXPECT_FALSE(verify_basis_exact(lp, slack).primal_feasible);
}
