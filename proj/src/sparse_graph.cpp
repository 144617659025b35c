#include "braingk/sparse_graph.hpp"

namespace braingk {

double lasso_kkt_residual(const Eigen::MatrixXd& X, int target, const Eigen::VectorXd& a,
                          double lambda) {
  const Eigen::VectorXd r = X.col(target) - X * a;
  double worst = 0.0;
  for (int j = 0; j < X.cols(); ++j) {
    if (j == target) continue;
    const double g = -2.0 * X.col(j).dot(r) + lambda;
    const double violation = a(j) > 0.0 ? std::abs(g) : std::max(0.0, -g);
    worst = std::max(worst, violation);
  }
  return worst;
}

SparseCode solve_nonneg_lasso(const Eigen::MatrixXd& X, int target, const SolverConfig& cfg) {
  const int k = static_cast<int>(X.cols());
  if (target < 0 || target >= k) throw std::invalid_argument("lasso target column out of range");
  if (!(cfg.tol > 0.0) || cfg.max_iter < 1 || cfg.lambda < 0.0)
    throw std::invalid_argument("invalid lasso solver config");
  if (!X.allFinite()) throw std::invalid_argument("lasso dictionary has non-finite entries");

  const Eigen::VectorXd sqnorms = X.colwise().squaredNorm();
  SparseCode code;
  code.coefficients = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd& a = code.coefficients;

  for (int sweep = 0; sweep < cfg.max_iter; ++sweep) {
    // Refresh the residual once per sweep so FP drift cannot accumulate.
    Eigen::VectorXd r = X.col(target) - X * a;
    for (int j = 0; j < k; ++j) {
      if (j == target || sqnorms(j) <= 0.0) continue;
      const double old = a(j);
      const double c = X.col(j).dot(r) + sqnorms(j) * old;
      const double next = std::max(0.0, (c - 0.5 * cfg.lambda) / sqnorms(j));
      if (next != old) {
        a(j) = next;
        r += X.col(j) * (old - next);
      }
    }
    code.iterations = sweep + 1;
    code.objective = r.squaredNorm() + cfg.lambda * a.sum();
    code.objective_history.push_back(code.objective);
    code.kkt_residual = lasso_kkt_residual(X, target, a, cfg.lambda);
    if (code.kkt_residual <= cfg.tol) return code;
  }
  throw ConvergenceError("nonnegative lasso did not reach tol " + std::to_string(cfg.tol) +
                             " after " + std::to_string(cfg.max_iter) +
                             " sweeps (KKT residual " + std::to_string(code.kkt_residual) + ")",
                         code.kkt_residual);
}

SimilarityMatrix l1_graph(const Eigen::MatrixXd& data, const SolverConfig& cfg) {
  const int k = static_cast<int>(data.rows());
  if (k < 2) throw std::invalid_argument("l1_graph needs at least 2 regions");

  // Unit-norm dictionary columns so one lambda is meaningful across regions.
  Eigen::MatrixXd dict = data.transpose();
  for (int j = 0; j < k; ++j) {
    const double norm = dict.col(j).norm();
    if (norm > 0.0) dict.col(j) /= norm;
  }

  Eigen::MatrixXd coeffs(k, k);
  for (int i = 0; i < k; ++i) {
    try {
      coeffs.row(i) = solve_nonneg_lasso(dict, i, cfg).coefficients.transpose();
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("region " + std::to_string(i) + ": " + e.what(), e.residual);
    }
  }

  SimilarityMatrix out;
  out.method = SimilarityMethod::L1Graph;
  out.values = 0.5 * (coeffs + coeffs.transpose());
  out.values.diagonal().setZero();
  return out;
}

}  // namespace braingk
