#pragma once

#include "braingk/types.hpp"

namespace braingk {

struct SolverConfig {
  double lambda = 0.1;   // l1 weight, on unit-norm dictionary columns
  double tol = 1e-6;     // max KKT violation accepted
  int max_iter = 10000;  // coordinate-descent sweeps
};

struct SparseCode {
  Eigen::VectorXd coefficients;  // length K, coefficients(target) == 0
  double objective = 0.0;
  int iterations = 0;  // sweeps actually run
  double kkt_residual = 0.0;
  std::vector<double> objective_history;  // one value per sweep
};

struct ConvergenceError : std::runtime_error {
  double residual;
  explicit ConvergenceError(const std::string& what, double r)
      : std::runtime_error(what), residual(r) {}
};

// min ||x_i - X a||^2 + lambda * ||a||_1  subject to a >= 0, a_i = 0,
// by cyclic coordinate descent with nonnegative soft-thresholding.
// Columns of X are the dictionary; column `target` is the coded series.
SparseCode solve_nonneg_lasso(const Eigen::MatrixXd& X, int target, const SolverConfig& cfg);

// Max stationarity violation of `a` for the problem above, recomputed from
// scratch; independent of any solver state.
double lasso_kkt_residual(const Eigen::MatrixXd& X, int target, const Eigen::VectorXd& a,
                          double lambda);

// Codes every region over the others (rows of `data` become unit-norm
// dictionary columns) and symmetrizes: W = (A + A^T) / 2, zero diagonal.
SimilarityMatrix l1_graph(const Eigen::MatrixXd& data, const SolverConfig& cfg);

}  // namespace braingk
