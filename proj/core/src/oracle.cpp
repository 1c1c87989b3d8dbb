#include "alphadom/oracle.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "alphadom/error.hpp"

namespace alphadom {

OracleResult brute_force_opt(const DominationInstance& inst) {
    const WeightedGraph& g = inst.graph();
    const std::size_t n = g.num_vertices();
    if (n > kBruteForceMaxVertices)
        throw InstanceTooLarge("brute force limited to " + std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                               std::to_string(n));

    std::vector<std::int64_t> coverage(n, 0);
    std::size_t violated = n;
    std::uint32_t mask = 0;
    Weight weight = 0;
    int size = 0;

    bool found = n == 0;
    std::uint32_t best_mask = 0;
    Weight best_weight = 0;
    int best_size = 0;

    auto better = [&]() {
        if (weight != best_weight) return weight < best_weight;
        if (size != best_size) return size < best_size;
        // Equal cardinality: the set owning the lowest differing vertex has
        // the lexicographically smaller sorted member list.
        const std::uint32_t diff = mask ^ best_mask;
        return diff != 0 && (mask & (diff & (~diff + 1))) != 0;
    };
    auto touch = [&](VertexId v, int delta) {
        const std::int64_t before = coverage[v];
        coverage[v] += delta;
        const std::int64_t need = inst.demand(v);
        if (before < need && coverage[v] >= need) --violated;
        if (before >= need && coverage[v] < need) ++violated;
    };

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto v = static_cast<VertexId>(std::countr_zero(i));
        const bool adding = (mask & (1u << v)) == 0;
        const int delta = adding ? 1 : -1;
        mask ^= 1u << v;
        weight += delta * g.weight(v);
        size += delta;
        touch(v, delta);
        for (VertexId u : g.neighbors(v)) touch(u, delta);
        if (violated == 0 && (!found || better())) {
            found = true;
            best_mask = mask;
            best_weight = weight;
            best_size = size;
        }
    }

    OracleResult result{best_weight, DominatingSet(g)};
    for (VertexId v = 0; v < n; ++v)
        if (best_mask & (1u << v)) result.opt_set.insert(v);
    return result;
}

std::vector<double> poisson_binomial_pmf(std::span<const double> probs) {
    std::vector<double> pmf(probs.size() + 1, 0.0);
    pmf[0] = 1.0;
    for (std::size_t t = 0; t < probs.size(); ++t) {
        const double p = probs[t];
        if (!(p >= 0.0 && p <= 1.0)) throw InputError("trial probability outside [0, 1]");
        for (std::size_t s = t + 1; s > 0; --s) pmf[s] = pmf[s] * (1.0 - p) + pmf[s - 1] * p;
        pmf[0] *= 1.0 - p;
    }
    return pmf;
}

double poisson_binomial_tail(std::span<const double> probs, std::int64_t k) {
    if (k <= 0) return 1.0;
    if (k > static_cast<std::int64_t>(probs.size())) return 0.0;
    const auto pmf = poisson_binomial_pmf(probs);
    // Kahan summation over the upper tail.
    double sum = 0.0, carry = 0.0;
    for (auto s = static_cast<std::size_t>(k); s < pmf.size(); ++s) {
        const double y = pmf[s] - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

bool check_tail_at_mean(std::span<const double> probs, std::int64_t k) {
    double total = 0.0;
    for (double p : probs) total += p;
    if (k < 1 || total + 1e-12 < static_cast<double>(k)) throw InputError("check_tail_at_mean requires sum(p) >= k >= 1");
    return poisson_binomial_tail(probs, k) >= 0.5 - 1e-12;
}

// ---------------------------------------------------------------------------

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

// Solves M z = rhs by Gauss–Jordan elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_exact(Matrix m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Rational p = m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] /= p;
        rhs[col] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

ExactBasisCheck verify_basis_exact(const LinearProgram& lp, const Basis& basis) {
    lp.validate();
    const std::size_t m = lp.rows.size();
    const std::size_t n = lp.n_vars;
    if (basis.basic_columns.size() != m || basis.status.size() != n + m)
        throw InputError("basis dimensions do not match the LP");

    // Column j of [A | -I] as a dense rational vector.
    std::vector<std::vector<int>> a(m, std::vector<int>(n + m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (auto j : lp.rows[i].vars) a[i][j] = 1;
        a[i][n + i] = -1;
    }
    auto cost = [&](std::size_t col) { return col < n ? Rational(lp.objective[col]) : Rational(0); };

    Matrix bmat(m, std::vector<Rational>(m));
    Matrix bt(m, std::vector<Rational>(m));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i < m; ++i) {
            bmat[i][r] = a[i][basis.basic_columns[r]];
            bt[r][i] = a[i][basis.basic_columns[r]];
        }

    std::vector<Rational> x(n + m, Rational(0));
    for (std::size_t j = 0; j < n + m; ++j)
        if (basis.status[j] == VarStatus::AtUpper) {
            if (j >= n) throw InputError("surplus column marked at upper bound");
            x[j] = 1;
        }
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = lp.rows[i].lower_bound;
        for (std::size_t j = 0; j < n + m; ++j)
            if (basis.status[j] != VarStatus::Basic && a[i][j] != 0) s -= a[i][j] * x[j];
        rhs[i] = s;
    }

    ExactBasisCheck out;
    auto xb = solve_exact(bmat, rhs);
    std::vector<Rational> cb(m);
    for (std::size_t r = 0; r < m; ++r) cb[r] = cost(basis.basic_columns[r]);
    auto y = solve_exact(bt, cb);
    if (!xb || !y) return out;
    out.nonsingular = true;

    out.primal_feasible = true;
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t col = basis.basic_columns[r];
        x[col] = (*xb)[r];
        if (x[col] < 0 || (col < n && x[col] > 1)) out.primal_feasible = false;
    }

    out.dual_feasible = true;
    for (std::size_t j = 0; j < n + m; ++j) {
        if (basis.status[j] == VarStatus::Basic) continue;
        Rational dj = cost(j);
        for (std::size_t i = 0; i < m; ++i)
            if (a[i][j] != 0) dj -= (*y)[i] * a[i][j];
        if (basis.status[j] == VarStatus::AtLower && dj < 0) out.dual_feasible = false;
        if (basis.status[j] == VarStatus::AtUpper && dj > 0) out.dual_feasible = false;
    }

    Rational obj = 0;
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        obj += cost(j) * x[j];
        out.values[j] = static_cast<double>(x[j]);
    }
    out.objective = static_cast<double>(obj);
    out.objective_exact = obj.str();
    return out;
}

}  // namespace alphadom
