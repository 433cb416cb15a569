// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 sigenv Project Contributors
//
// Two small dense kernels back the envelope fits:
//  - an LP solved as a two-phase tableau simplex on the dual, whose basis
//    has one row per primal variable (2L+1) rather than one per constraint,
//  - a least-distance QP solved by Hildreth dual coordinate ascent with an
//    active-set polish for a machine-precision KKT certificate.

#include "sigenv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sigenv/errors.hpp"

namespace sigenv {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kRatioTieTol = 1e-12;

void validate_problem(const Matrix& a, std::span<const double> per_col,
                      std::span<const double> per_row) {
  if (a.rows() == 0 || a.cols() == 0) throw Error("solver: empty constraint matrix");
  if (per_col.size() != a.cols()) throw Error("solver: vector length != columns");
  if (per_row.size() != a.rows()) throw Error("solver: vector length != rows");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (double v : a.row(i))
      if (!std::isfinite(v)) throw Error("solver: non-finite matrix entry");
  for (double v : per_col)
    if (!std::isfinite(v)) throw Error("solver: non-finite entry");
  for (double v : per_row)
    if (!std::isfinite(v)) throw Error("solver: non-finite entry");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves M y = rhs for square M by Gaussian elimination with partial
// pivoting. Returns false if a pivot falls below tol.
bool gaussian_solve(std::vector<std::vector<double>> m, std::vector<double> rhs,
                    std::vector<double>& out, std::uint64_t& flops,
                    double tol = 1e-12) {
  const std::size_t n = rhs.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (std::abs(m[piv][k]) < tol) return false;
    std::swap(m[k], m[piv]);
    std::swap(rhs[k], rhs[piv]);
    const double inv = 1.0 / m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i][k] * inv;
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
      flops += 2 * (n - k) + 2;
    }
  }
  out.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * out[j];
    out[k] = s / m[k][k];
    flops += 2 * (n - k);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard-form tableau simplex with Bland's rule:
//   minimize cost'z  subject to  E z = rhs, z >= 0.
// Rows are flipped up front so rhs >= 0; artificial columns seed phase 1 and
// carry the pricing vector afterwards.
// ---------------------------------------------------------------------------

class StandardSimplex {
 public:
  enum class StepResult { Optimal, Unbounded, IterLimit };

  StandardSimplex(std::vector<std::vector<double>> eq, std::vector<double> rhs,
                  std::vector<double> cost, int max_iterations)
      : nvars_(cost.size()),
        neq_(eq.size()),
        ncols_(nvars_ + neq_),
        cost_(std::move(cost)),
        barred_(ncols_, false) {
    rows_.assign(neq_ + 1, std::vector<double>(ncols_ + 1, 0.0));
    basis_.resize(neq_);
    flipped_.assign(neq_, false);
    for (std::size_t j = 0; j < neq_; ++j) {
      const double sgn = rhs[j] < 0.0 ? -1.0 : 1.0;
      flipped_[j] = sgn < 0.0;
      for (std::size_t i = 0; i < nvars_; ++i) rows_[j][i] = sgn * eq[j][i];
      rows_[j][nvars_ + j] = 1.0;
      rows_[j][ncols_] = sgn * rhs[j];
      basis_[j] = static_cast<int>(nvars_ + j);
      rhs_scale_ += std::abs(rhs[j]);
    }
    max_iters_ = max_iterations > 0 ? max_iterations
                                    : static_cast<int>(50 * (ncols_ + neq_) + 1000);
  }

  // Drives the artificial sum to (near) zero. Returns Unbounded when the
  // equality system admits no nonnegative solution.
  StepResult phase1() {
    auto& obj = rows_[neq_];
    std::fill(obj.begin(), obj.end(), 0.0);
    for (std::size_t i = 0; i <= ncols_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < neq_; ++j) s += rows_[j][i];
      if (i < nvars_ || i == ncols_) obj[i] = -s;
    }
    in_phase1_ = true;
    const StepResult r = iterate();
    if (r != StepResult::Optimal) return r;
    if (-obj[ncols_] > 1e-8 * (1.0 + rhs_scale_)) return StepResult::Unbounded;
    drop_stuck_artificials();
    return StepResult::Optimal;
  }

  StepResult phase2() {
    in_phase1_ = false;
    for (std::size_t i = nvars_; i < ncols_; ++i) barred_[i] = true;
    const std::size_t neq = rows_.size() - 1;
    auto& obj = rows_[neq];
    std::fill(obj.begin(), obj.end(), 0.0);
    for (std::size_t i = 0; i <= ncols_; ++i) {
      const double ci = (i < nvars_) ? cost_[i] : 0.0;
      double s = 0.0;
      for (std::size_t r = 0; r < neq; ++r) {
        const int b = basis_[r];
        const double cb = (b < static_cast<int>(nvars_)) ? cost_[b] : 0.0;
        s += cb * rows_[r][i];
      }
      obj[i] = (i == ncols_) ? -s : ci - s;
    }
    return iterate();
  }

  std::vector<double> solution() const {
    std::vector<double> z(nvars_, 0.0);
    for (std::size_t r = 0; r + 1 < rows_.size(); ++r)
      if (basis_[r] < static_cast<int>(nvars_))
        z[basis_[r]] = std::max(0.0, rows_[r][ncols_]);
    return z;
  }

  // Pricing vector y with cost_i - y'E_i = reduced cost; read from the
  // artificial columns of the objective row (y_j accounts for row flips).
  std::vector<double> pricing() const {
    std::vector<double> y(neq_, 0.0);
    const auto& obj = rows_.back();
    for (std::size_t j = 0; j < neq_; ++j) {
      y[j] = -obj[nvars_ + j];
      if (flipped_[j]) y[j] = -y[j];
    }
    return y;
  }

  std::span<const int> basis() const { return basis_; }
  std::size_t active_rows() const { return rows_.size() - 1; }
  int iterations() const { return iterations_; }
  std::uint64_t flops() const { return flops_; }

 private:
  StepResult iterate() {
    const std::size_t neq = rows_.size() - 1;
    auto& obj = rows_[neq];
    while (true) {
      if (iterations_ >= max_iters_) return StepResult::IterLimit;
      // Bland: smallest eligible column with a negative reduced cost.
      int enter = -1;
      for (std::size_t i = 0; i < ncols_; ++i) {
        if (barred_[i]) continue;
        if (obj[i] < -kReducedCostTol) {
          enter = static_cast<int>(i);
          break;
        }
      }
      flops_ += ncols_;
      if (enter < 0) return StepResult::Optimal;

      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < neq; ++r) {
        const double a = rows_[r][enter];
        if (a > kPivotTol) {
          const double ratio = std::max(0.0, rows_[r][ncols_]) / a;
          if (ratio < best - kRatioTieTol) {
            best = ratio;
            leave = static_cast<int>(r);
          } else if (ratio < best + kRatioTieTol && leave >= 0 &&
                     basis_[r] < basis_[leave]) {
            leave = static_cast<int>(r);
          }
        }
      }
      flops_ += 2 * neq;
      if (leave < 0) return StepResult::Unbounded;

      if (in_phase1_ && basis_[leave] >= static_cast<int>(nvars_))
        barred_[basis_[leave]] = true;  // artificials never come back
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
      basis_[leave] = enter;
      ++iterations_;
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = rows_[pr];
    const double inv = 1.0 / prow[pc];
    for (double& v : prow) v *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pr) continue;
      auto& row = rows_[r];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= ncols_; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
      flops_ += 2 * (ncols_ + 1);
    }
    for (std::size_t r = 0; r + 1 < rows_.size(); ++r)
      if (rows_[r][ncols_] < 0.0 && rows_[r][ncols_] > -1e-11)
        rows_[r][ncols_] = 0.0;
  }

  // Phase-1 leftovers: pivot zero-level artificials out; a row whose
  // variable part vanished is a redundant equality and is dropped.
  void drop_stuck_artificials() {
    for (std::size_t r = 0; r + 1 < rows_.size();) {
      if (basis_[r] < static_cast<int>(nvars_)) {
        ++r;
        continue;
      }
      int enter = -1;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (std::abs(rows_[r][i]) > kPivotTol) {
          enter = static_cast<int>(i);
          break;
        }
      }
      if (enter >= 0) {
        barred_[basis_[r]] = true;
        pivot(r, static_cast<std::size_t>(enter));
        basis_[r] = enter;
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::size_t nvars_, neq_, ncols_;
  std::vector<double> cost_;
  std::vector<std::vector<double>> rows_;  // neq_+1 rows; last = reduced costs
  std::vector<int> basis_;
  std::vector<bool> flipped_;
  std::vector<bool> barred_;
  bool in_phase1_ = true;
  int max_iters_ = 0;
  int iterations_ = 0;
  double rhs_scale_ = 0.0;
  std::uint64_t flops_ = 0;
};

// Farkas test: {x : A x >= lower} is empty iff some lam >= 0 with
// A'lam = 0 has lower'lam > 0. Normalizing by sum(lam) + s = 1 keeps the
// certificate LP feasible and bounded, so no classification recursion is
// ever needed.
bool polyhedron_feasible(const Matrix& a, std::span<const double> lower,
                         std::uint64_t& flops) {
  const std::size_t m = a.rows(), d = a.cols();
  std::vector<std::vector<double>> eq(d + 1, std::vector<double>(m + 1, 0.0));
  std::vector<double> rhs(d + 1, 0.0), cost(m + 1, 0.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < m; ++i) eq[j][i] = a(i, j);
  for (std::size_t i = 0; i <= m; ++i) eq[d][i] = 1.0;
  rhs[d] = 1.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    cost[i] = -lower[i];  // maximize lower'lam
    scale = std::max(scale, std::abs(lower[i]));
  }
  StandardSimplex s(std::move(eq), std::move(rhs), std::move(cost), 0);
  if (s.phase1() != StandardSimplex::StepResult::Optimal)
    throw Error("solver: internal Farkas system failed phase 1");
  if (s.phase2() != StandardSimplex::StepResult::Optimal)
    throw Error("solver: internal Farkas system is unbounded");
  const std::vector<double> lam = s.solution();
  flops += s.flops();
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) best += lower[i] * lam[i];
  return best <= 1e-9 * (1.0 + scale);
}

}  // namespace

bool kkt_ok(const KktReport& k, const SolverOptions& opts, double scale) {
  return k.stationarity <= opts.optimality_tol * scale &&
         k.min_multiplier >= -opts.optimality_tol * scale &&
         k.complementarity <= opts.optimality_tol * scale &&
         k.max_violation <= opts.feasibility_tol * scale;
}

SolveReport solve_lp(const LinearProgram& lp, const SolverOptions& opts) {
  validate_problem(lp.A, lp.cost, lp.lower);
  const std::size_t m = lp.A.rows(), d = lp.A.cols();

  // Dual: max lower'lam s.t. A'lam = cost, lam >= 0.
  std::vector<std::vector<double>> eq(d, std::vector<double>(m));
  std::vector<double> rhs(d), cost(m);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) eq[j][i] = lp.A(i, j);
    rhs[j] = lp.cost[j];
  }
  for (std::size_t i = 0; i < m; ++i) cost[i] = -lp.lower[i];
  StandardSimplex simplex(std::move(eq), std::move(rhs), std::move(cost),
                          opts.max_iterations);

  auto extract = [&](SolveStatus status) {
    SolveReport rep;
    rep.status = status;
    rep.iterations = simplex.iterations();
    rep.multipliers = simplex.solution();
    rep.flops = simplex.flops();

    // Primal from the pricing vector: x_j = -y_j certifies A x >= lower
    // through the nonnegative reduced costs.
    const std::vector<double> y = simplex.pricing();
    std::vector<double> x_price(d);
    for (std::size_t j = 0; j < d; ++j) x_price[j] = -y[j];

    auto violation = [&](const std::vector<double>& x) {
      double v = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i)
        v = std::max(v, lp.lower[i] - dot(lp.A.row(i), x));
      return v;
    };

    rep.x = x_price;
    rep.max_violation = violation(x_price);

    // Basis-system recovery: the active rows solved exactly. Preferred
    // when it is at least as feasible as the tableau numbers.
    if (simplex.active_rows() == d) {
      std::vector<std::vector<double>> ab(d, std::vector<double>(d));
      std::vector<double> brhs(d);
      bool all_constraint_rows = true;
      auto basis = simplex.basis();
      for (std::size_t r = 0; r < d; ++r) {
        if (basis[r] >= static_cast<int>(m)) {
          all_constraint_rows = false;
          break;
        }
        for (std::size_t j = 0; j < d; ++j) ab[r][j] = lp.A(basis[r], j);
        brhs[r] = lp.lower[basis[r]];
      }
      std::vector<double> x_basis;
      std::uint64_t fl = 0;
      if (all_constraint_rows &&
          gaussian_solve(std::move(ab), std::move(brhs), x_basis, fl)) {
        const double vb = violation(x_basis);
        if (vb <= rep.max_violation) {
          rep.x = std::move(x_basis);
          rep.max_violation = vb;
        }
      }
      rep.flops += fl;
    }

    rep.objective = dot(lp.cost, rep.x);
    double dual_obj = 0.0;
    for (std::size_t i = 0; i < m; ++i) dual_obj += lp.lower[i] * rep.multipliers[i];
    rep.duality_gap = rep.objective - dual_obj;
    return rep;
  };

  const auto p1 = simplex.phase1();
  if (p1 == StandardSimplex::StepResult::IterLimit)
    return extract(SolveStatus::IterationLimit);
  if (p1 == StandardSimplex::StepResult::Unbounded) {
    // Dual infeasible: the primal is unbounded if it has any feasible point.
    std::uint64_t aux_flops = 0;
    if (polyhedron_feasible(lp.A, lp.lower, aux_flops))
      throw Unbounded("solve_lp: cost unbounded below on the feasible region");
    throw Infeasible("solve_lp: constraints are inconsistent");
  }

  const auto p2 = simplex.phase2();
  if (p2 == StandardSimplex::StepResult::IterLimit)
    return extract(SolveStatus::IterationLimit);
  if (p2 == StandardSimplex::StepResult::Unbounded)
    throw Infeasible("solve_lp: constraints are inconsistent");
  return extract(SolveStatus::Optimal);
}

KktReport verify_kkt(const LinearProgram& lp, const SolveReport& rep) {
  KktReport k;
  const std::size_t m = lp.A.rows(), d = lp.A.cols();
  for (std::size_t j = 0; j < d; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += rep.multipliers[i] * lp.A(i, j);
    k.stationarity = std::max(k.stationarity, std::abs(s - lp.cost[j]));
  }
  k.min_multiplier = 0.0;
  for (double v : rep.multipliers) k.min_multiplier = std::min(k.min_multiplier, v);
  k.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const double slack = dot(lp.A.row(i), rep.x) - lp.lower[i];
    k.max_violation = std::max(k.max_violation, -slack);
    k.complementarity =
        std::max(k.complementarity, std::abs(rep.multipliers[i] * slack));
  }
  return k;
}

// ---------------------------------------------------------------------------
// Least-distance QP.
// ---------------------------------------------------------------------------

namespace {

struct PolishResult {
  std::vector<double> x;
  std::vector<double> multipliers;
  bool ok = false;
};

// Re-solves the projection exactly on a candidate active set, growing it
// with violated rows and shrinking it on negative multipliers
// (NNLS-style). Smallest-index rows are dropped first on rank problems.
PolishResult polish_active_set(const LeastDistanceQP& qp,
                               std::vector<std::size_t> active,
                               const SolverOptions& opts, std::uint64_t& flops) {
  PolishResult out;
  const std::size_t m = qp.A.rows(), d = qp.A.cols();
  const int max_passes = static_cast<int>(4 * d + 16);
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());

  for (int pass = 0; pass < max_passes; ++pass) {
    if (active.size() > 3 * d + 8) return out;  // not converged enough to trust
    std::vector<double> x(qp.target.begin(), qp.target.end());
    std::vector<double> mu;
    if (!active.empty()) {
      const std::size_t s = active.size();
      std::vector<std::vector<double>> gram(s, std::vector<double>(s));
      std::vector<double> rhs(s);
      for (std::size_t p = 0; p < s; ++p) {
        for (std::size_t q = 0; q < s; ++q)
          gram[p][q] = dot(qp.A.row(active[p]), qp.A.row(active[q]));
        rhs[p] = qp.lower[active[p]] - dot(qp.A.row(active[p]), qp.target);
        flops += 2 * s * d + 2 * d;
      }
      if (!gaussian_solve(std::move(gram), std::move(rhs), mu, flops)) {
        active.erase(active.begin());  // dependent set: drop smallest index
        continue;
      }
      // Drop the smallest-index row with a clearly negative multiplier.
      int drop = -1;
      for (std::size_t p = 0; p < s; ++p)
        if (mu[p] < -1e-12) {
          drop = static_cast<int>(p);
          break;
        }
      if (drop >= 0) {
        active.erase(active.begin() + drop);
        continue;
      }
      for (std::size_t p = 0; p < s; ++p)
        for (std::size_t j = 0; j < d; ++j) x[j] += mu[p] * qp.A(active[p], j);
      flops += 2 * active.size() * d;
    }
    // Add the most violated row, if any.
    int add = -1;
    double worst = opts.feasibility_tol * 0.5;
    for (std::size_t i = 0; i < m; ++i) {
      const double v = qp.lower[i] - dot(qp.A.row(i), x);
      if (v > worst) {
        worst = v;
        add = static_cast<int>(i);
      }
    }
    flops += 2 * m * d;
    if (add >= 0) {
      const auto pos = std::lower_bound(active.begin(), active.end(),
                                        static_cast<std::size_t>(add));
      if (pos != active.end() && *pos == static_cast<std::size_t>(add))
        return out;  // row already active yet still violated: give up
      active.insert(pos, static_cast<std::size_t>(add));
      continue;
    }
    out.x = std::move(x);
    out.multipliers.assign(m, 0.0);
    for (std::size_t p = 0; p < active.size(); ++p)
      out.multipliers[active[p]] = mu[p];
    out.ok = true;
    return out;
  }
  return out;
}

}  // namespace

SolveReport solve_ldqp(const LeastDistanceQP& qp, const SolverOptions& opts) {
  validate_problem(qp.A, qp.target, qp.lower);
  const std::size_t m = qp.A.rows(), d = qp.A.cols();
  std::uint64_t flops = 0;

  std::vector<double> rownorm2(m);
  for (std::size_t i = 0; i < m; ++i) {
    rownorm2[i] = dot(qp.A.row(i), qp.A.row(i));
    flops += 2 * d;
    if (rownorm2[i] < 1e-30 && qp.lower[i] > opts.feasibility_tol)
      throw Infeasible("solve_ldqp: zero row with positive bound");
  }

  std::vector<double> lam(m, 0.0);
  std::vector<double> x(qp.target.begin(), qp.target.end());
  const int max_sweeps = opts.max_iterations > 0 ? opts.max_iterations : 200;
  int sweeps = 0;
  bool converged = false;
  for (; sweeps < max_sweeps;) {
    for (std::size_t i = 0; i < m; ++i) {
      if (rownorm2[i] < 1e-30) continue;
      const double resid = qp.lower[i] - dot(qp.A.row(i), x);
      const double lam_new = std::max(0.0, lam[i] + resid / rownorm2[i]);
      const double delta = lam_new - lam[i];
      if (delta != 0.0) {
        for (std::size_t j = 0; j < d; ++j) x[j] += delta * qp.A(i, j);
        lam[i] = lam_new;
      }
      flops += 4 * d + 4;
    }
    ++sweeps;
    double viol = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double slack = dot(qp.A.row(i), x) - qp.lower[i];
      viol = std::max(viol, -slack);
      comp = std::max(comp, std::abs(lam[i] * slack));
    }
    flops += 2 * m * d;
    if (viol <= opts.feasibility_tol && comp <= opts.optimality_tol) {
      converged = true;
      break;
    }
  }

  // Certificate-grade finish on the identified active set.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < m; ++i) {
    const double slack = dot(qp.A.row(i), x) - qp.lower[i];
    if (lam[i] > 1e-12 || slack < opts.feasibility_tol) active.push_back(i);
  }
  PolishResult polished = polish_active_set(qp, std::move(active), opts, flops);
  if (polished.ok) {
    x = std::move(polished.x);
    lam = std::move(polished.multipliers);
    converged = true;
  } else if (!converged) {
    if (!polyhedron_feasible(qp.A, qp.lower, flops))
      throw Infeasible("solve_ldqp: constraints are inconsistent");
  }

  SolveReport rep;
  rep.x = std::move(x);
  rep.multipliers = std::move(lam);
  double obj = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double dj = rep.x[j] - qp.target[j];
    obj += dj * dj;
  }
  rep.objective = obj;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  double comp_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double slack = dot(qp.A.row(i), rep.x) - qp.lower[i];
    rep.max_violation = std::max(rep.max_violation, -slack);
    comp_sum += rep.multipliers[i] * slack;
  }
  rep.duality_gap = std::abs(2.0 * comp_sum);
  rep.iterations = sweeps;
  rep.status = converged ? SolveStatus::Optimal : SolveStatus::IterationLimit;
  rep.flops = flops;
  return rep;
}

KktReport verify_kkt(const LeastDistanceQP& qp, const SolveReport& rep) {
  KktReport k;
  const std::size_t m = qp.A.rows(), d = qp.A.cols();
  for (std::size_t j = 0; j < d; ++j) {
    double s = rep.x[j] - qp.target[j];
    for (std::size_t i = 0; i < m; ++i) s -= rep.multipliers[i] * qp.A(i, j);
    k.stationarity = std::max(k.stationarity, std::abs(s));
  }
  k.min_multiplier = 0.0;
  for (double v : rep.multipliers) k.min_multiplier = std::min(k.min_multiplier, v);
  k.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const double slack = dot(qp.A.row(i), rep.x) - qp.lower[i];
    k.max_violation = std::max(k.max_violation, -slack);
    k.complementarity =
        std::max(k.complementarity, std::abs(rep.multipliers[i] * slack));
  }
  return k;
}

}  // namespace sigenv
