#pragma once

#include "braingk/sparse_graph.hpp"  // ConvergenceError
#include "braingk/types.hpp"

#include <array>
#include <nlohmann/json.hpp>
#include <optional>

namespace braingk {

// Strict upper triangle, row-major.
Eigen::VectorXd vectorize_upper(const SimilarityMatrix& m);

KernelMatrix linear_kernel(const std::vector<Eigen::VectorXd>& features);

// k'(a,b) = k(a,b) / sqrt(k(a,a) k(b,b)); unit diagonal afterwards.
KernelMatrix normalize_kernel(const KernelMatrix& k);

// Convex combination of normalized kernels.
KernelMatrix sum_kernel(const std::vector<KernelMatrix>& kernels,
                        const std::vector<double>& weights);

struct SvmConfig {
  double C = 1.0;
  double tol = 1e-3;       // max KKT violation at the stop
  long max_iter = 2000000;  // SMO pair updates
};

struct SVMModel {
  Eigen::VectorXd alpha;
  std::vector<int> y;  // +-1 per training subject
  double bias = 0.0;
  std::vector<int> support;  // indices with alpha > 0
  double C = 1.0;
  double kkt_violation = 0.0;  // at termination
  std::string tag;

  // Dual objective sum(alpha) - 0.5 * alpha^T Q alpha.
  double dual_objective(const Eigen::MatrixXd& kernel) const;
};

// SMO with maximal-violating-pair selection; deterministic (ties resolve
// to the lowest index).
SVMModel train_svm(const Eigen::MatrixXd& kernel, const std::vector<int>& y,
                   const SvmConfig& cfg);

// Decision value sum_i alpha_i y_i k(x_i, x) + b for one test subject.
double predict(const SVMModel& model, const Eigen::VectorXd& kernel_row);

struct MulticlassModel {
  std::array<std::optional<SVMModel>, 3> machines;  // one-vs-rest per class
  std::vector<std::string> warnings;
};

MulticlassModel train_multiclass(const Eigen::MatrixXd& kernel,
                                 const std::vector<SeverityClass>& labels, const SvmConfig& cfg);

// Argmax of decision values; ties break toward the milder class.
SeverityClass multiclass_decide(const MulticlassModel& model, const Eigen::VectorXd& kernel_row,
                                std::array<double, 3>* decisions = nullptr);

struct EvalReport {
  std::vector<std::string> ids;
  std::vector<SeverityClass> truth;
  std::vector<SeverityClass> predicted;
  std::vector<std::array<double, 3>> decisions;
  Eigen::Matrix3i confusion;  // rows = truth, cols = predicted
  std::vector<std::string> warnings;
  nlohmann::json config;

  int size() const { return static_cast<int>(truth.size()); }
  double accuracy_percent() const;
  nlohmann::json to_json() const;
};

// Percent with two decimals, the tables' format.
std::string format_accuracy(int correct, int total);
double round2(double v);

// Leave-one-out: per subject, train one-vs-rest machines on the principal
// submatrix that excludes it and predict from its kernel row.
EvalReport loo_evaluate(const KernelMatrix& kernel, const std::vector<SeverityClass>& labels,
                        const SvmConfig& cfg, const std::vector<std::string>& ids = {});

// Smallest/largest eigenvalue pair, for PSD checks.
std::pair<double, double> eigen_range(const Eigen::MatrixXd& sym);

}  // namespace braingk
