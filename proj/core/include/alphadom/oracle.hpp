#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alphadom/graph.hpp"
#include "alphadom/lp.hpp"

namespace alphadom {

inline constexpr std::size_t kBruteForceMaxVertices = 22;

struct OracleResult {
    Weight opt_weight = 0;
    DominatingSet opt_set;
};

/// Exhaustive search (Gray-code order) for a minimum-weight feasible set.
/// Ties: fewer vertices, then the lexicographically least member list.
/// Throws InstanceTooLarge above kBruteForceMaxVertices.
OracleResult brute_force_opt(const DominationInstance& inst);

/// Distribution of the number of successes in independent Bernoulli trials.
std::vector<double> poisson_binomial_pmf(std::span<const double> probs);

/// P(X ≥ k) for X ~ PoissonBinomial(probs); 1 for k ≤ 0, 0 for k > |probs|.
double poisson_binomial_tail(std::span<const double> probs, std::int64_t k);

/// Checks P(X ≥ k) ≥ 1/2 for trial probabilities with Σp ≥ k ≥ 1. Always
/// expected to hold; a false return points at a bug in the tail routine.
bool check_tail_at_mean(std::span<const double> probs, std::int64_t k);

/// Result of re-deriving a simplex basis in exact rational arithmetic.
struct ExactBasisCheck {
    bool nonsingular = false;
    bool primal_feasible = false;
    bool dual_feasible = false;  // reduced-cost signs match the bound statuses
    double objective = 0.0;
    std::string objective_exact;  // "p/q"
    std::vector<double> values;
};

ExactBasisCheck verify_basis_exact(const LinearProgram& lp, const Basis& basis);

}  // namespace alphadom
