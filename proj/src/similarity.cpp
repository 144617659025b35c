#include "braingk/similarity.hpp"

#include <algorithm>
#include <vector>

namespace braingk {

SimilarityMatrix pearson_similarity(const Eigen::MatrixXd& data) {
  const int k = static_cast<int>(data.rows());
  const int n = static_cast<int>(data.cols());
  if (k < 2 || n < 2) throw std::invalid_argument("pearson_similarity needs at least 2x2 data");

  Eigen::MatrixXd centered = data.colwise() - data.rowwise().mean();
  Eigen::VectorXd norms(k);
  std::vector<bool> constant(k, false);

  SimilarityMatrix out;
  out.method = SimilarityMethod::Correlation;
  out.values = Eigen::MatrixXd::Zero(k, k);

  for (int i = 0; i < k; ++i) {
    norms(i) = centered.row(i).norm();
    if (norms(i) <= 0.0) {
      constant[i] = true;
      out.degenerate_rows.push_back(i);
    }
  }

  for (int i = 0; i < k; ++i) {
    if (constant[i]) continue;  // whole row/column stays 0
    out.values(i, i) = 1.0;
    for (int j = i + 1; j < k; ++j) {
      if (constant[j]) continue;
      const double r = centered.row(i).dot(centered.row(j)) / (norms(i) * norms(j));
      out.values(i, j) = r;
      out.values(j, i) = r;
    }
  }
  return out;
}

double rbf_median_gamma(const Eigen::MatrixXd& data) {
  const int k = static_cast<int>(data.rows());
  if (k < 2) throw std::invalid_argument("median heuristic needs at least 2 rows");
  std::vector<double> dists;
  dists.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) dists.push_back((data.row(i) - data.row(j)).norm());
  std::sort(dists.begin(), dists.end());
  const size_t m = dists.size();
  const double median = (m % 2 == 1) ? dists[m / 2] : 0.5 * (dists[m / 2 - 1] + dists[m / 2]);
  if (median <= 0.0)
    throw std::runtime_error(
        "RBF median heuristic failed (median pairwise distance is zero); pass an explicit gamma");
  return 1.0 / (2.0 * median * median);
}

SimilarityMatrix rbf_similarity(const Eigen::MatrixXd& data, std::optional<double> gamma) {
  const int k = static_cast<int>(data.rows());
  if (k < 2) throw std::invalid_argument("rbf_similarity needs at least 2 rows");
  const double g = gamma ? *gamma : rbf_median_gamma(data);
  if (g <= 0.0) throw std::invalid_argument("RBF gamma must be positive");

  SimilarityMatrix out;
  out.method = SimilarityMethod::RBF;
  out.values = Eigen::MatrixXd::Ones(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double d2 = (data.row(i) - data.row(j)).squaredNorm();
      const double v = std::exp(-g * d2);
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  return out;
}

Eigen::MatrixXd pca_directions(const Eigen::MatrixXd& samples, int d) {
  const int k = static_cast<int>(samples.rows());
  const int n = static_cast<int>(samples.cols());
  const int rank = std::min(k, n);
  if (d < 1 || d > rank)
    throw std::invalid_argument("pca: d must be in [1, min(samples,dims)] = [1, " +
                                std::to_string(rank) + "], got " + std::to_string(d));

  Eigen::MatrixXd centered = samples.rowwise() - samples.colwise().mean();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  // Singular values come out decreasing, so directions are already sorted
  // by explained variance.
  Eigen::MatrixXd directions = svd.matrixV().leftCols(d);
  for (int c = 0; c < d; ++c) {
    int arg = 0;
    directions.col(c).cwiseAbs().maxCoeff(&arg);
    if (directions(arg, c) < 0.0) directions.col(c) = -directions.col(c);
  }
  return directions;
}

Eigen::MatrixXd pca_features(const Eigen::MatrixXd& data, int d) {
  const Eigen::MatrixXd directions = pca_directions(data, d);
  const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  return centered * directions;
}

SimilarityMatrix normalize_unit_interval(SimilarityMatrix m) {
  const int k = m.size();
  if (k < 2) throw std::invalid_argument("normalize_unit_interval needs at least 2x2 input");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      lo = std::min(lo, m.values(i, j));
      hi = std::max(hi, m.values(i, j));
    }
  if (!(hi > lo))
    throw std::runtime_error(
        "degenerate similarity matrix: all off-diagonal entries equal, thresholding would give a "
        "complete or empty graph");

  const double range = hi - lo;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) m.values(i, j) = (m.values(i, j) - lo) / range;
  m.normalized = true;
  return m;
}

}  // namespace braingk
