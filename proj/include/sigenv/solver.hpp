// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 sigenv Project Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sigenv {

/// Minimal dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// minimize cost'x subject to A x >= lower (x free).
struct LinearProgram {
  std::vector<double> cost;
  Matrix A;
  std::vector<double> lower;
};

/// minimize ||x - target||^2 subject to A x >= lower.
struct LeastDistanceQP {
  std::vector<double> target;
  Matrix A;
  std::vector<double> lower;
};

enum class SolveStatus { Optimal, IterationLimit };

struct SolveReport {
  std::vector<double> x;
  std::vector<double> multipliers;  // one per constraint row, >= 0
  double objective = 0.0;
  double max_violation = 0.0;  // max_i (lower_i - A_i x); <= 0 means feasible
  double duality_gap = 0.0;
  int iterations = 0;
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t flops = 0;
};

struct SolverOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-7;
  int max_iterations = 0;  // 0 = automatic
};

/// KKT residuals of a candidate solution.
struct KktReport {
  double stationarity = 0.0;     // LP: ||A'lam - cost||_inf; QP: ||x - t - A'lam||_inf
  double min_multiplier = 0.0;   // most negative multiplier
  double complementarity = 0.0;  // max_i |lam_i (A_i x - lower_i)|
  double max_violation = 0.0;    // max_i (lower_i - A_i x)
};

bool kkt_ok(const KktReport& k, const SolverOptions& opts, double scale = 1.0);

/// Two-phase dense simplex with Bland's rule, run on the dual
/// (max lower'lam s.t. A'lam = cost, lam >= 0), so the tableau has one row
/// per primal variable and one column per constraint. The primal solution
/// is recovered from the optimal basis (the active constraint rows).
/// Throws Infeasible / Unbounded; an exhausted pivot budget returns the
/// best iterate with status IterationLimit.
SolveReport solve_lp(const LinearProgram& lp, const SolverOptions& opts = {});

/// Hildreth dual coordinate ascent for the least-distance QP, followed by
/// an active-set polish that re-solves the identified active rows exactly
/// so the KKT certificate holds at machine precision.
/// Throws Infeasible; an exhausted sweep budget returns the best iterate
/// with status IterationLimit.
SolveReport solve_ldqp(const LeastDistanceQP& qp, const SolverOptions& opts = {});

KktReport verify_kkt(const LinearProgram& lp, const SolveReport& rep);
KktReport verify_kkt(const LeastDistanceQP& qp, const SolveReport& rep);

}  // namespace sigenv
