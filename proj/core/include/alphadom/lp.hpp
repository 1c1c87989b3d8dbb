#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "alphadom/graph.hpp"

namespace alphadom {

/// Covering LP with 0/1 row coefficients and [0,1] variable bounds:
///
///   min  Σ c_j x_j
///   s.t. Σ_{j ∈ row_i} x_j ≥ b_i   for every row i
///        0 ≤ x_j ≤ 1
///
/// b_i ≤ |row_i| is required, so x = 1 is always feasible.
struct LinearProgram {
    struct Row {
        std::vector<std::uint32_t> vars;  // ascending, distinct
        std::int64_t lower_bound = 0;
    };

    std::size_t n_vars = 0;
    std::vector<Weight> objective;
    std::vector<Row> rows;

    /// Throws InputError if the program is malformed or infeasible at x = 1.
    void validate() const;
};

/// One row per vertex over its closed neighborhood, bound = demand(v),
/// objective = vertex weights.
LinearProgram build_lp(const DominationInstance& inst);

enum class VarStatus : std::uint8_t { Basic, AtLower, AtUpper };

/// Columns 0..n_vars-1 are the structural variables; column n_vars + i is
/// the surplus of row i (Σ x − s_i = b_i, s_i ≥ 0).
struct Basis {
    std::vector<std::size_t> basic_columns;  // one per row
    std::vector<VarStatus> status;           // one per column

    friend bool operator==(const Basis&, const Basis&) = default;
};

struct FractionalSolution {
    std::vector<double> values;
    double objective_value = 0.0;
    Basis basis;
    std::size_t iterations = 0;  // pivots + bound flips
};

struct SimplexOptions {
    double tolerance = 1e-9;
    /// Consecutive degenerate pivots tolerated under largest-coefficient
    /// pricing before switching to Bland's rule.
    std::size_t degenerate_streak_limit = 50;
    /// 0 selects a size-based default.
    std::size_t max_iterations = 0;
};

/// Bounded-variable primal simplex. The basis inverse is held as the dense
/// inverse of its tight-rows x basic-structurals kernel, so memory and
/// per-pivot work scale with the number of fractional variables rather than
/// with n. Starts from an integral greedy cover with every surplus basic.
/// Returns an optimal basic solution; throws SolverFault if feasibility or
/// optimality cannot be certified within tolerance.
FractionalSolution solve(const LinearProgram& lp, const SimplexOptions& options = {});

/// Max constraint violation and bound violation of `x` (0 when feasible).
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

/// CPLEX-style LP text (Minimize / Subject To / Bounds / End).
void write_lp_text(std::ostream& os, const LinearProgram& lp, const WeightedGraph* labels = nullptr);

}  // namespace alphadom
