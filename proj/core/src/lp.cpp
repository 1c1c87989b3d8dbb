#include "alphadom/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "alphadom/error.hpp"

namespace alphadom {

void LinearProgram::validate() const {
    if (objective.size() != n_vars) throw InputError("LP objective size does not match variable count");
    for (Weight c : objective)
        if (c < 0) throw InputError("LP objective coefficients must be nonnegative");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        for (std::size_t k = 0; k < row.vars.size(); ++k) {
            if (row.vars[k] >= n_vars) throw InputError("LP row " + std::to_string(i) + " references unknown variable");
            if (k > 0 && row.vars[k - 1] >= row.vars[k])
                throw InputError("LP row " + std::to_string(i) + " variables not strictly ascending");
        }
        if (row.lower_bound > static_cast<std::int64_t>(row.vars.size()))
            throw InputError("LP row " + std::to_string(i) + " bound exceeds row size (infeasible)");
    }
}

LinearProgram build_lp(const DominationInstance& inst) {
    const WeightedGraph& g = inst.graph();
    LinearProgram lp;
    lp.n_vars = g.num_vertices();
    lp.objective.assign(g.weights().begin(), g.weights().end());
    lp.rows.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto& row = lp.rows[v];
        auto nbrs = g.neighbors(v);
        row.vars.reserve(nbrs.size() + 1);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
        row.vars.insert(row.vars.end(), nbrs.begin(), it);
        row.vars.push_back(v);
        row.vars.insert(row.vars.end(), it, nbrs.end());
        row.lower_bound = inst.demand(v);
    }
    return lp;
}

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
    double worst = 0.0;
    for (double xi : x) worst = std::max({worst, -xi, xi - 1.0});
    for (const auto& row : lp.rows) {
        double lhs = 0.0;
        for (auto j : row.vars) lhs += x[j];
        worst = std::max(worst, static_cast<double>(row.lower_bound) - lhs);
    }
    return worst;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kRatioTol = 1e-7;
constexpr double kSnap = 1e-11;
// Row bounds are relaxed by amounts in [kPerturb, 2 kPerturb) while pivoting.
constexpr double kPerturb = 1e-6;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Bounded-variable revised simplex for [A | -I] with x in [0,1], s >= 0.
//
// A basis holds k structural columns S and the surplus columns of every row
// outside a set T of k tight rows. Its inverse reduces to the inverse of the
// kernel K = A[T, S], which is kept explicitly as a dense k x k matrix
// (rows indexed by S position, columns by T position) and updated in O(k^2)
// per pivot. The kernel grows or shrinks by one when a surplus column
// leaves or enters the basis.
//
// Pivoting runs on row bounds relaxed by small distinct amounts, which keeps
// basic values off their bounds and avoids the long degenerate stalls these
// 0/1 covering programs otherwise produce. The exact bounds are then restored
// and a few dual simplex pivots repair any basic value pushed out of range.
class RevisedSimplex {
public:
    RevisedSimplex(const LinearProgram& lp, const SimplexOptions& opt)
        : lp_(lp), opt_(opt), m_(lp.rows.size()), n_(lp.n_vars), cols_(n_ + m_), columns_(n_),
          status_(cols_, VarStatus::AtLower), x_(n_, 0.0), lhs_(m_, 0.0), s_pos_(n_, kNone), t_pos_(m_, kNone),
          y_row_(m_, 0.0), ds_(m_, 0.0), is_touched_(m_, 0), d_(cols_, 0.0), rhs_(m_) {
        for (std::size_t i = 0; i < m_; ++i)
            for (auto j : lp.rows[i].vars) columns_[j].push_back(i);
        // Golden-ratio sequence: distinct, evenly spread, reproducible.
        for (std::size_t i = 0; i < m_; ++i) {
            const double frac = std::fmod(0.6180339887498949 * static_cast<double>(i + 1), 1.0);
            rhs_[i] = static_cast<double>(lp.rows[i].lower_bound) - kPerturb * (1.0 + frac);
        }
        start_from_cover();
    }

    std::size_t run() {
        const std::size_t limit = opt_.max_iterations ? opt_.max_iterations : 50 * cols_ + 1000;
        std::size_t iterations = 0;
        primal(limit, iterations);
        for (std::size_t i = 0; i < m_; ++i) rhs_[i] = static_cast<double>(lp_.rows[i].lower_bound);
        recompute_values(false);
        dual_cleanup(limit, iterations);
        primal(limit, iterations);
        return iterations;
    }

    FractionalSolution extract() const {
        FractionalSolution sol;
        sol.values.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            double v = std::clamp(x_[j], 0.0, 1.0);
            if (v < kSnap) v = 0.0;
            if (v > 1.0 - kSnap) v = 1.0;
            sol.values[j] = v;
        }
        sol.objective_value = 0.0;
        for (std::size_t j = 0; j < n_; ++j) sol.objective_value += static_cast<double>(lp_.objective[j]) * sol.values[j];
        for (std::size_t c = 0; c < cols_; ++c)
            if (status_[c] == VarStatus::Basic) sol.basis.basic_columns.push_back(c);
        sol.basis.status = status_;
        return sol;
    }

private:
    void primal(std::size_t limit, std::size_t& iterations) {
        for (int refresh = 0;; ++refresh) {
            while (step()) {
                if (++iterations > limit) throw SolverFault("simplex iteration limit exceeded");
                if (++since_refactor_ >= refactor_interval()) refactor();
            }
            refactor();
            if (price().first == kNone) return;
            if (refresh >= 5) throw SolverFault("simplex failed to certify optimality after refactorization");
        }
    }

    // Dual simplex pivots, starting from a dual feasible basis, until every
    // basic value lies within its bounds.
    void dual_cleanup(std::size_t limit, std::size_t& iterations) {
        std::vector<double> rate(cols_, 0.0);
        for (;;) {
            // Leaving variable: the largest bound violation.
            std::size_t leave = kNone;
            double worst = opt_.tolerance;
            bool below = true;
            for (std::size_t a = 0; a < k(); ++a) {
                const double v = x_[s_[a]];
                if (-v > worst) worst = -v, leave = s_[a], below = true;
                if (v - 1.0 > worst) worst = v - 1.0, leave = s_[a], below = false;
            }
            for (std::size_t i = 0; i < m_; ++i)
                if (t_pos_[i] == kNone && rhs_[i] - lhs_[i] > worst) worst = rhs_[i] - lhs_[i], leave = n_ + i, below = true;
            if (leave == kNone) return;
            if (++iterations > limit) throw SolverFault("simplex iteration limit exceeded");
            price();

            // rate[c]: change of the leaving value per unit move of nonbasic c
            // away from its current bound.
            std::vector<double> u;
            const double* kin = nullptr;
            if (leave < n_) {
                kin = &kinv_[s_pos_[leave] * cap_];
            } else {
                u = row_times_inverse(leave - n_);
                kin = u.data();
            }
            for (std::size_t j = 0; j < n_; ++j) {
                if (status_[j] == VarStatus::Basic) continue;
                double g = 0.0;
                for (auto i : columns_[j])
                    if (t_pos_[i] != kNone) g -= kin[t_pos_[i]];
                if (leave >= n_) {
                    const auto& vars = lp_.rows[leave - n_].vars;
                    if (std::binary_search(vars.begin(), vars.end(), static_cast<std::uint32_t>(j))) g += 1.0;
                }
                rate[j] = status_[j] == VarStatus::AtUpper ? -g : g;
            }
            for (std::size_t b = 0; b < k(); ++b) rate[n_ + t_[b]] = kin[b];

            // Dual ratio test over columns that move the leaving value toward its bound.
            std::size_t q = kNone;
            double best = kInf, mag = 0.0;
            auto offer = [&](std::size_t c) {
                const double r = below ? rate[c] : -rate[c];
                if (r <= kRatioTol) return;
                const double dj = status_[c] == VarStatus::AtUpper ? -d_[c] : d_[c];
                const double ratio = std::max(0.0, dj) / r;
                if (q == kNone || ratio < best - 1e-12 || (ratio <= best + 1e-12 && r > mag + 1e-12)) {
                    q = c;
                    best = ratio;
                    mag = r;
                }
            };
            for (std::size_t j = 0; j < n_; ++j)
                if (status_[j] != VarStatus::Basic) offer(j);
            for (std::size_t b = 0; b < k(); ++b) offer(n_ + t_[b]);
            if (q == kNone) throw SolverFault("LP infeasible after restoring exact row bounds");

            if (leave < n_) {
                x_[leave] = below ? 0.0 : 1.0;
                status_[leave] = below ? VarStatus::AtLower : VarStatus::AtUpper;
            } else {
                status_[leave] = VarStatus::AtLower;
            }
            status_[q] = VarStatus::Basic;
            if (q < n_) {
                const std::vector<double> w = kernel_column(q);
                if (leave < n_)
                    replace_column(s_pos_[leave], q, w);
                else
                    grow(leave - n_, q, w);
            } else if (leave < n_) {
                shrink(s_pos_[leave], t_pos_[q - n_]);
            } else {
                replace_row(t_pos_[q - n_], leave - n_);
            }
            if (++since_refactor_ >= refactor_interval()) invert();
            recompute_values(false);
        }
    }

    std::size_t refactor_interval() const { return std::max<std::size_t>(256, 4 * k()); }

    // K^{-1} A[T, q] for a structural column q.
    std::vector<double> kernel_column(std::size_t q) const {
        std::vector<double> w(k(), 0.0);
        std::vector<std::size_t> hit;
        for (auto i : columns_[q])
            if (t_pos_[i] != kNone) hit.push_back(t_pos_[i]);
        if (!hit.empty())
            for (std::size_t a = 0; a < k(); ++a) {
                const double* row = &kinv_[a * cap_];
                double acc = 0.0;
                for (auto b : hit) acc += row[b];
                w[a] = acc;
            }
        return w;
    }

    double& kinv(std::size_t a, std::size_t b) { return kinv_[a * cap_ + b]; }
    double kinv(std::size_t a, std::size_t b) const { return kinv_[a * cap_ + b]; }
    std::size_t k() const { return s_.size(); }
    double cost(std::size_t j) const { return static_cast<double>(lp_.objective[j]); }

    // Integral starting point: scan rows in order and top up each deficient
    // row with its cheapest unused variables. All surplus columns are basic.
    void start_from_cover() {
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& row = lp_.rows[i];
            std::int64_t have = 0;
            std::vector<std::uint32_t> free;
            for (auto j : row.vars) {
                if (x_[j] == 1.0)
                    ++have;
                else
                    free.push_back(j);
            }
            if (have >= row.lower_bound) continue;
            const auto need = static_cast<std::size_t>(row.lower_bound - have);
            std::partial_sort(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(need), free.end(),
                              [&](std::uint32_t a, std::uint32_t b) {
                                  return lp_.objective[a] != lp_.objective[b] ? lp_.objective[a] < lp_.objective[b]
                                                                              : a < b;
                              });
            for (std::size_t t = 0; t < need; ++t) x_[free[t]] = 1.0;
        }
        for (std::size_t j = 0; j < n_; ++j) status_[j] = x_[j] == 1.0 ? VarStatus::AtUpper : VarStatus::AtLower;
        for (std::size_t i = 0; i < m_; ++i) status_[n_ + i] = VarStatus::Basic;
        recompute_activity();
    }

    void recompute_activity() {
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0.0;
            for (auto j : lp_.rows[i].vars) s += x_[j];
            lhs_[i] = s;
        }
    }

    void reserve(std::size_t want) {
        if (want <= cap_) return;
        const std::size_t cap = std::min(std::max<std::size_t>({16, 2 * cap_, want}), std::min(n_, m_));
        std::vector<double> next(cap * cap, 0.0);
        for (std::size_t a = 0; a < k(); ++a)
            for (std::size_t b = 0; b < k(); ++b) next[a * cap + b] = kinv(a, b);
        kinv_ = std::move(next);
        cap_ = cap;
    }

    // y = c_S K^{-1}, the duals of the tight rows.
    void recompute_duals() {
        y_.assign(k(), 0.0);
        for (std::size_t a = 0; a < k(); ++a) {
            const double c = cost(s_[a]);
            if (c == 0.0) continue;
            const double* row = &kinv_[a * cap_];
            for (std::size_t b = 0; b < k(); ++b) y_[b] += c * row[b];
        }
    }

    // Reduced costs from the maintained duals; returns the entering column and
    // its direction (+1 up from lower bound, -1 down from upper bound).
    std::pair<std::size_t, int> price() {
        for (std::size_t b = 0; b < k(); ++b) y_row_[t_[b]] = y_[b];

        std::size_t q = kNone;
        int dir = 0;
        double best = 0.0;
        auto consider = [&](std::size_t c, int cdir) {
            if (cdir == 0 || (bland_ && q != kNone)) return;
            if (bland_ || std::abs(d_[c]) > best) {
                best = std::abs(d_[c]);
                q = c;
                dir = cdir;
            }
        };
        for (std::size_t j = 0; j < n_; ++j) {
            if (status_[j] == VarStatus::Basic) {
                d_[j] = 0.0;
                continue;
            }
            double dj = cost(j);
            for (auto i : columns_[j]) dj -= y_row_[i];
            d_[j] = dj;
            if (status_[j] == VarStatus::AtLower && dj < -opt_.tolerance) consider(j, 1);
            if (status_[j] == VarStatus::AtUpper && dj > opt_.tolerance) consider(j, -1);
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t c = n_ + i;
            d_[c] = t_pos_[i] == kNone ? 0.0 : y_row_[i];
            if (t_pos_[i] != kNone && d_[c] < -opt_.tolerance) consider(c, 1);
        }
        for (std::size_t b = 0; b < k(); ++b) y_row_[t_[b]] = 0.0;
        return {q, dir};
    }

    bool step() {
        const auto [q, dir] = price();
        if (q == kNone) return false;

        // Per-unit change of the basic structurals (dx) and row activities (ds_).
        std::vector<double> w;  // K^{-1} times the entering column restricted to T
        if (q < n_) {
            w = kernel_column(q);
        } else {
            w.assign(k(), 0.0);
            const std::size_t b = t_pos_[q - n_];
            for (std::size_t a = 0; a < k(); ++a) w[a] = -kinv(a, b);
        }
        std::vector<double> dx(k());
        for (std::size_t a = 0; a < k(); ++a) dx[a] = -dir * w[a];

        touched_.clear();
        auto bump = [&](std::size_t i, double v) {
            if (!is_touched_[i]) {
                is_touched_[i] = 1;
                touched_.push_back(i);
            }
            ds_[i] += v;
        };
        if (q < n_)
            for (auto i : columns_[q]) bump(i, dir);
        for (std::size_t a = 0; a < k(); ++a)
            if (dx[a] != 0.0)
                for (auto i : columns_[s_[a]]) bump(i, dx[a]);

        // Ratio test. Leaving candidate identified by its column index.
        std::size_t leave = kNone;
        std::size_t leave_pos = kNone;
        double theta = kInf;
        double mag = 0.0;
        bool leave_at_upper = false;
        // Distance to a bound, with values within tolerance snapped to the bound.
        auto room = [&](double gap) { return gap <= opt_.tolerance ? 0.0 : gap; };
        auto offer = [&](std::size_t col, std::size_t pos, double limit, double rate, bool to_upper) {
            bool take = false;
            if (leave == kNone || limit < theta - 1e-12) {
                take = true;
            } else if (limit <= theta + 1e-12) {
                if (bland_)
                    take = col < leave;
                else
                    take = std::abs(rate) > mag + 1e-12 || (std::abs(rate) >= mag - 1e-12 && col < leave);
            }
            if (take) {
                leave = col;
                leave_pos = pos;
                theta = limit;
                mag = std::abs(rate);
                leave_at_upper = to_upper;
            }
        };
        for (std::size_t a = 0; a < k(); ++a) {
            const double rate = dx[a];
            if (std::abs(rate) <= kRatioTol) continue;
            const double v = x_[s_[a]];
            if (rate < 0.0)
                offer(s_[a], a, room(v) / -rate, rate, false);
            else
                offer(s_[a], a, room(1.0 - v) / rate, rate, true);
        }
        for (auto i : touched_) {
            if (t_pos_[i] != kNone) continue;
            const double rate = ds_[i];
            if (rate >= -kRatioTol) continue;
            offer(n_ + i, i, room(lhs_[i] - rhs_[i]) / -rate, rate, false);
        }

        const double flip = q < n_ ? 1.0 : kInf;
        if (flip == kInf && leave == kNone) throw SolverFault("LP unbounded along column " + std::to_string(q));

        const bool is_flip = flip <= theta;
        const double step_len = is_flip ? flip : theta;
        if (!is_flip && theta <= opt_.tolerance) {
            if (++degenerate_streak_ > opt_.degenerate_streak_limit) bland_ = true;
        } else {
            degenerate_streak_ = 0;
            bland_ = false;
        }

        for (std::size_t a = 0; a < k(); ++a) x_[s_[a]] += step_len * dx[a];
        if (q < n_) x_[q] += dir * step_len;
        for (auto i : touched_) {
            lhs_[i] += step_len * ds_[i];
            ds_[i] = 0.0;
            is_touched_[i] = 0;
        }

        if (is_flip) {
            x_[q] = dir > 0 ? 1.0 : 0.0;
            status_[q] = dir > 0 ? VarStatus::AtUpper : VarStatus::AtLower;
            return true;
        }

        if (leave < n_) {
            x_[leave] = leave_at_upper ? 1.0 : 0.0;
            status_[leave] = leave_at_upper ? VarStatus::AtUpper : VarStatus::AtLower;
        } else {
            status_[leave] = VarStatus::AtLower;
        }
        status_[q] = VarStatus::Basic;

        if (q < n_ && leave < n_)
            replace_column(leave_pos, q, w);
        else if (q < n_)
            grow(leave_pos, q, w);
        else if (leave < n_)
            shrink(leave_pos, t_pos_[q - n_]);
        else
            replace_row(t_pos_[q - n_], leave_pos);
        return true;
    }

    // h = A[r, S] K^{-1}, indexed by T position.
    std::vector<double> row_times_inverse(std::size_t r) const {
        std::vector<double> h(k(), 0.0);
        for (auto j : lp_.rows[r].vars) {
            const std::size_t a = s_pos_[j];
            if (a == kNone) continue;
            const double* row = &kinv_[a * cap_];
            for (std::size_t b = 0; b < k(); ++b) h[b] += row[b];
        }
        return h;
    }

    // Structural q takes the S slot `a`.
    void replace_column(std::size_t a, std::size_t q, const std::vector<double>& w) {
        const double p = w[a];
        double* prow = &kinv_[a * cap_];
        double gamma = cost(q);
        for (std::size_t i = 0; i < k(); ++i)
            if (i != a) gamma -= cost(s_[i]) * w[i];
        const double g = gamma / p - cost(s_[a]);
        for (std::size_t b = 0; b < k(); ++b) y_[b] += g * prow[b];
        for (std::size_t b = 0; b < k(); ++b) prow[b] /= p;
        for (std::size_t i = 0; i < k(); ++i) {
            if (i == a || w[i] == 0.0) continue;
            double* row = &kinv_[i * cap_];
            const double f = w[i];
            for (std::size_t b = 0; b < k(); ++b) row[b] -= f * prow[b];
        }
        s_pos_[s_[a]] = kNone;
        s_[a] = q;
        s_pos_[q] = a;
    }

    // Structural q joins S and row r joins T.
    void grow(std::size_t r, std::size_t q, const std::vector<double>& w) {
        const auto& vars = lp_.rows[r].vars;
        double sigma = std::binary_search(vars.begin(), vars.end(), static_cast<std::uint32_t>(q)) ? 1.0 : 0.0;
        for (auto j : vars)
            if (s_pos_[j] != kNone) sigma -= w[s_pos_[j]];
        if (std::abs(sigma) <= kPivotTol * 1e-3) throw SolverFault("singular kernel extension");
        const std::vector<double> h = row_times_inverse(r);
        const std::size_t kk = k();
        double delta = cost(q);
        for (std::size_t a = 0; a < kk; ++a) delta -= cost(s_[a]) * w[a];
        delta /= sigma;
        for (std::size_t b = 0; b < kk; ++b) y_[b] -= delta * h[b];
        y_.push_back(delta);
        reserve(kk + 1);
        for (std::size_t a = 0; a < kk; ++a) {
            double* row = &kinv_[a * cap_];
            const double f = w[a] / sigma;
            if (f != 0.0)
                for (std::size_t b = 0; b < kk; ++b) row[b] += f * h[b];
            row[kk] = -w[a] / sigma;
        }
        double* last = &kinv_[kk * cap_];
        for (std::size_t b = 0; b < kk; ++b) last[b] = -h[b] / sigma;
        last[kk] = 1.0 / sigma;
        s_.push_back(q);
        s_pos_[q] = kk;
        t_.push_back(r);
        t_pos_[r] = kk;
    }

    // S slot `a` and T slot `b` leave the kernel.
    void shrink(std::size_t a, std::size_t b) {
        const std::size_t kk = k();
        const double s = kinv(a, b);
        std::vector<double> rrow(kk);
        for (std::size_t c = 0; c < kk; ++c) rrow[c] = kinv(a, c) / s;
        const double yb = y_[b];
        for (std::size_t c = 0; c < kk; ++c) y_[c] -= yb * rrow[c];
        for (std::size_t i = 0; i < kk; ++i) {
            if (i == a) continue;
            const double f = kinv(i, b);
            if (f == 0.0) continue;
            double* row = &kinv_[i * cap_];
            for (std::size_t c = 0; c < kk; ++c) row[c] -= f * rrow[c];
        }
        const std::size_t last = kk - 1;
        if (a != last)
            for (std::size_t c = 0; c < kk; ++c) kinv(a, c) = kinv(last, c);
        if (b != last)
            for (std::size_t i = 0; i < kk; ++i) kinv(i, b) = kinv(i, last);
        s_pos_[s_[a]] = kNone;
        t_pos_[t_[b]] = kNone;
        if (a != last) {
            s_[a] = s_[last];
            s_pos_[s_[a]] = a;
        }
        if (b != last) {
            t_[b] = t_[last];
            t_pos_[t_[b]] = b;
            y_[b] = y_[last];
        }
        y_.pop_back();
        s_.pop_back();
        t_.pop_back();
    }

    // Row r replaces the row at T slot b.
    void replace_row(std::size_t b, std::size_t r) {
        const std::vector<double> h = row_times_inverse(r);
        const double p = h[b];
        const double yb = y_[b] / p;
        for (std::size_t c = 0; c < k(); ++c) y_[c] -= yb * h[c];
        y_[b] = yb;
        for (std::size_t i = 0; i < k(); ++i) {
            double* row = &kinv_[i * cap_];
            const double f = row[b] / p;
            if (f != 0.0)
                for (std::size_t c = 0; c < k(); ++c) row[c] -= f * h[c];
            row[b] = f;
        }
        t_pos_[t_[b]] = kNone;
        t_[b] = r;
        t_pos_[r] = b;
    }

    // Rebuild K^{-1} and every value from the nonbasic bounds, shedding
    // accumulated drift.
    void refactor() {
        invert();
        recompute_values(true);
    }

    // Gauss-Jordan elimination of [K | I].
    void invert() {
        since_refactor_ = 0;
        const std::size_t kk = k();
        std::vector<double> mat(kk * 2 * kk, 0.0);
        const std::size_t w2 = 2 * kk;
        for (std::size_t b = 0; b < kk; ++b) {
            for (auto j : lp_.rows[t_[b]].vars)
                if (s_pos_[j] != kNone) mat[b * w2 + s_pos_[j]] = 1.0;
            mat[b * w2 + kk + b] = 1.0;
        }
        // Row b of [K | I] reduces to row a of [I | K^{-1}] with a the pivot column.
        for (std::size_t col = 0; col < kk; ++col) {
            std::size_t piv = col;
            for (std::size_t i = col + 1; i < kk; ++i)
                if (std::abs(mat[i * w2 + col]) > std::abs(mat[piv * w2 + col])) piv = i;
            if (std::abs(mat[piv * w2 + col]) < 1e-12) throw SolverFault("basis kernel became singular");
            if (piv != col)
                for (std::size_t c = 0; c < w2; ++c) std::swap(mat[piv * w2 + c], mat[col * w2 + c]);
            const double p = mat[col * w2 + col];
            for (std::size_t c = 0; c < w2; ++c) mat[col * w2 + c] /= p;
            for (std::size_t i = 0; i < kk; ++i) {
                if (i == col) continue;
                const double f = mat[i * w2 + col];
                if (f == 0.0) continue;
                for (std::size_t c = col; c < w2; ++c) mat[i * w2 + c] -= f * mat[col * w2 + c];
            }
        }
        for (std::size_t a = 0; a < kk; ++a)
            for (std::size_t b = 0; b < kk; ++b) kinv(a, b) = mat[a * w2 + kk + b];
        recompute_duals();
    }

    // Basic values from the nonbasic bounds. With `strict`, a value outside
    // its bounds beyond tolerance is a solver fault.
    void recompute_values(bool strict) {
        const std::size_t kk = k();
        std::vector<double> rhs(kk);
        for (std::size_t b = 0; b < kk; ++b) {
            double s = rhs_[t_[b]];
            for (auto j : lp_.rows[t_[b]].vars)
                if (status_[j] == VarStatus::AtUpper) s -= 1.0;
            rhs[b] = s;
        }
        for (std::size_t a = 0; a < kk; ++a) {
            double v = 0.0;
            for (std::size_t b = 0; b < kk; ++b) v += kinv(a, b) * rhs[b];
            if (!strict) {
                x_[s_[a]] = v;
                continue;
            }
            if (v < -1e-7 || v > 1.0 + 1e-7)
                throw SolverFault("simplex lost primal feasibility (basic value " + std::to_string(v) + ")");
            x_[s_[a]] = std::clamp(v, 0.0, 1.0);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (status_[j] == VarStatus::AtUpper) x_[j] = 1.0;
            if (status_[j] == VarStatus::AtLower) x_[j] = 0.0;
        }
        recompute_activity();
        if (!strict) return;
        for (std::size_t i = 0; i < m_; ++i) {
            if (t_pos_[i] != kNone) continue;
            const double s = lhs_[i] - rhs_[i];
            if (s < -1e-7 * (1.0 + lhs_[i]))
                throw SolverFault("simplex lost primal feasibility (surplus " + std::to_string(s) + ")");
        }
    }

    const LinearProgram& lp_;
    const SimplexOptions& opt_;
    std::size_t m_, n_, cols_;
    std::vector<std::vector<std::size_t>> columns_;
    std::vector<VarStatus> status_;
    std::vector<double> x_;    // structural values
    std::vector<double> lhs_;  // row activities
    std::vector<std::size_t> s_, t_;
    std::vector<std::size_t> s_pos_, t_pos_;
    std::vector<double> kinv_;
    std::size_t cap_ = 0;
    std::vector<double> y_;      // duals by T position
    std::vector<double> y_row_;  // duals scattered by row, zero outside T
    std::vector<double> ds_;
    std::vector<char> is_touched_;
    std::vector<double> d_;
    std::vector<std::size_t> touched_;
    std::size_t since_refactor_ = 0;
    std::size_t degenerate_streak_ = 0;
    bool bland_ = false;
    std::vector<double> rhs_;  // working row bounds
};

}  // namespace

FractionalSolution solve(const LinearProgram& lp, const SimplexOptions& options) {
    lp.validate();
    RevisedSimplex simplex(lp, options);
    const std::size_t iterations = simplex.run();
    FractionalSolution sol = simplex.extract();
    sol.iterations = iterations;

    if (max_violation(lp, sol.values) > options.tolerance * std::max(1.0, static_cast<double>(lp.rows.size())))
        throw SolverFault("LP solution violates constraints beyond tolerance");
    return sol;
}

void write_lp_text(std::ostream& os, const LinearProgram& lp, const WeightedGraph* labels) {
    auto name = [&](std::size_t j) { return "x" + std::to_string(j); };
    os << "\\ alpha-rate domination LP relaxation";
    if (labels) os << " (" << labels->num_vertices() << " vertices)";
    os << "\nMinimize\n obj:";
    for (std::size_t j = 0; j < lp.n_vars; ++j) os << (j ? " + " : " ") << lp.objective[j] << ' ' << name(j);
    os << "\nSubject To\n";
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        os << " c" << i << ':';
        bool first = true;
        for (auto j : lp.rows[i].vars) {
            os << (first ? " " : " + ") << name(j);
            first = false;
        }
        os << " >= " << lp.rows[i].lower_bound << '\n';
    }
    os << "Bounds\n";
    for (std::size_t j = 0; j < lp.n_vars; ++j) os << " 0 <= " << name(j) << " <= 1\n";
    if (labels && labels->has_labels()) {
        for (std::size_t j = 0; j < lp.n_vars; ++j) os << "\\ " << name(j) << " = " << labels->label(static_cast<VertexId>(j)) << '\n';
    }
    os << "End\n";
}

}  // namespace alphadom
