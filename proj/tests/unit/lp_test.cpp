#include <gtest/gtest.h>

#include <sstream>

#include "alphadom/error.hpp"
#include "alphadom/generators.hpp"
#include "alphadom/lp.hpp"
#include "alphadom/oracle.hpp"
#include "test_support.hpp"

using namespace alphadom;
using alphadom::testing::complete_graph;
using alphadom::testing::make_graph;

TEST(BuildLp, K2HalfGivesTwoIdenticalRows) {
    DominationInstance inst(complete_graph({2, 7}), Alpha(1, 2));
    auto lp = build_lp(inst);
    ASSERT_EQ(lp.rows.size(), 2u);
    for (const auto& row : lp.rows) {
        EXPECT_EQ(row.vars, (std::vector<std::uint32_t>{0, 1}));
        EXPECT_EQ(row.lower_bound, 1);
    }
    EXPECT_EQ(lp.objective, (std::vector<Weight>{2, 7}));
}

TEST(BuildLp, IsolatedAndK3) {
    auto iso = build_lp(DominationInstance(make_graph({4}, {}), Alpha(1, 4)));
    ASSERT_EQ(iso.rows.size(), 1u);
    EXPECT_EQ(iso.rows[0].vars, (std::vector<std::uint32_t>{0}));
    EXPECT_EQ(iso.rows[0].lower_bound, 1);
    auto k3 = build_lp(DominationInstance(complete_graph({1, 1, 1}), Alpha(1, 1)));
    for (const auto& row : k3.rows) EXPECT_EQ(row.lower_bound, 3);
}

TEST(BuildLp, RowsContainTheirOwnVertex) {
    auto g = gen_gnm(60, 200, 4);
    auto lp = build_lp(DominationInstance(g, Alpha(1, 3)));
    for (std::uint32_t i = 0; i < lp.rows.size(); ++i) {
        EXPECT_TRUE(std::binary_search(lp.rows[i].vars.begin(), lp.rows[i].vars.end(), i));
        EXPECT_LE(lp.rows[i].lower_bound, static_cast<std::int64_t>(lp.rows[i].vars.size()));
    }
}

TEST(Solve, K2) {
    auto sol = solve(build_lp(DominationInstance(complete_graph({2, 7}), Alpha(1, 2))));
    EXPECT_EQ(sol.values, (std::vector<double>{1.0, 0.0}));
    EXPECT_DOUBLE_EQ(sol.objective_value, 2.0);
}

TEST(Solve, ForcedCases) {
    auto k3 = solve(build_lp(DominationInstance(complete_graph({3, 8, 4}), Alpha(1, 1))));
    EXPECT_EQ(k3.values, (std::vector<double>{1.0, 1.0, 1.0}));
    EXPECT_DOUBLE_EQ(k3.objective_value, 15.0);
    auto iso = solve(build_lp(DominationInstance(make_graph({9}, {}), Alpha(1, 2))));
    EXPECT_EQ(iso.values, (std::vector<double>{1.0}));
    EXPECT_DOUBLE_EQ(iso.objective_value, 9.0);
}

TEST(Solve, FractionalOptimumOnTriangle) {
    // x1+x2+x3 >= 2 with weights (1,1,1): any vertex of the polytope has
    // objective 2; the LP value is exactly 2.
    auto sol = solve(build_lp(DominationInstance(complete_graph({1, 1, 1}), Alpha(1, 2))));
    EXPECT_NEAR(sol.objective_value, 2.0, 1e-9);
}

TEST(Solve, EmptyProgram) {
    LinearProgram lp;
    auto sol = solve(lp);
    EXPECT_TRUE(sol.values.empty());
    EXPECT_EQ(sol.objective_value, 0.0);
}

TEST(Solve, RejectsMalformedPrograms) {
    LinearProgram lp;
    lp.n_vars = 2;
    lp.objective = {1, 1};
    lp.rows.push_back({{0, 1}, 3});
    EXPECT_THROW(solve(lp), InputError);
    lp.rows[0] = {{1, 0}, 1};
    EXPECT_THROW(solve(lp), InputError);
    lp.rows[0] = {{0, 5}, 1};
    EXPECT_THROW(solve(lp), InputError);
    lp.rows[0] = {{0, 1}, 1};
    lp.objective = {-1, 1};
    EXPECT_THROW(solve(lp), InputError);
}

TEST(Solve, IterationLimitRaisesSolverFault) {
    auto lp = build_lp(DominationInstance(assign_weights(gen_gnm(40, 150, 2), {1, 71}, 2), Alpha(1, 2)));
    SimplexOptions opt;
    opt.max_iterations = 1;
    EXPECT_THROW(solve(lp, opt), SolverFault);
}

TEST(WriteLpText, ContainsSections) {
    auto g = alphadom::testing::path_graph({5, 1, 3});
    auto lp = build_lp(DominationInstance(g, Alpha(1, 2)));
    std::ostringstream os;
    write_lp_text(os, lp, &g);
    const std::string text = os.str();
    EXPECT_NE(text.find("Minimize"), std::string::npos);
    EXPECT_NE(text.find(" obj: 5 x0 + 1 x1 + 3 x2"), std::string::npos);
    EXPECT_NE(text.find(" c1: x0 + x1 + x2 >= 2"), std::string::npos);
    EXPECT_NE(text.find("0 <= x2 <= 1"), std::string::npos);
    EXPECT_NE(text.find("\\ x1 = b"), std::string::npos);
    EXPECT_EQ(text.substr(text.size() - 4), "End\n");
}

class LpProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LpProperties, FeasibleOptimalAndBelowIntegerOptimum) {
    Rng rng(GetParam());
    for (int trial = 0; trial < 40; ++trial) {
        auto g = alphadom::testing::random_graph(rng, 12, 71);
        DominationInstance inst(g, alphadom::testing::random_alpha(rng));
        auto lp = build_lp(inst);
        auto sol = solve(lp);
        ASSERT_LE(max_violation(lp, sol.values), 1e-9);
        double obj = 0.0, sum_w = 0.0;
        for (std::size_t j = 0; j < lp.n_vars; ++j) {
            obj += static_cast<double>(lp.objective[j]) * sol.values[j];
            sum_w += static_cast<double>(lp.objective[j]);
        }
        ASSERT_NEAR(obj, sol.objective_value, 1e-9 * sum_w);
        const Weight opt = alphadom::testing::naive_opt(g, inst.alpha());
        ASSERT_LE(sol.objective_value, static_cast<double>(opt) * (1 + 1e-6));

        auto exact = verify_basis_exact(lp, sol.basis);
        ASSERT_TRUE(exact.nonsingular);
        ASSERT_TRUE(exact.primal_feasible);
        ASSERT_TRUE(exact.dual_feasible);
        ASSERT_NEAR(exact.objective, sol.objective_value, 1e-9 * std::max(1.0, exact.objective));
    }
}

TEST_P(LpProperties, ObjectiveScalesWithWeightsAndSolveIsDeterministic) {
    Rng rng(GetParam() + 50);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = alphadom::testing::random_graph(rng, 30, 71);
        DominationInstance inst(g, alphadom::testing::random_alpha(rng));
        auto lp = build_lp(inst);
        auto base = solve(lp);
        auto again = solve(lp);
        ASSERT_EQ(base.values, again.values);
        ASSERT_EQ(base.basis, again.basis);
        for (Weight factor : {2, 8}) {
            auto scaled = lp;
            for (auto& c : scaled.objective) c *= factor;
            auto sol = solve(scaled);
            ASSERT_NEAR(sol.objective_value, factor * base.objective_value, 1e-9 * factor * base.objective_value);
            // Power-of-two scaling leaves every pricing comparison unchanged.
            ASSERT_EQ(sol.basis, base.basis);
            ASSERT_EQ(sol.values, base.values);
        }
    }
}

TEST_P(LpProperties, LargerStructuredInstancesStayFeasible) {
    Rng rng(GetParam() + 77);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 100 + rng() % 150;
        GenSpec spec = trial % 3 == 0   ? GenSpec(GnmSpec{n, n * 5})
                       : trial % 3 == 1 ? GenSpec(PowerlawClusterSpec{n, 4, 0.6})
                                        : GenSpec(PlantedPartitionSpec{4, n / 4, 0.15, 0.01});
        auto g = assign_weights(generate(spec, rng()).graph, {1, 71}, rng());
        DominationInstance inst(g, alphadom::testing::random_alpha(rng));
        auto lp = build_lp(inst);
        auto sol = solve(lp);
        ASSERT_LE(max_violation(lp, sol.values), 1e-9);
        for (double x : sol.values) ASSERT_TRUE(x >= 0.0 && x <= 1.0);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LpProperties, ::testing::Values(21u, 22u, 23u));
