#pragma once

#include "braingk/types.hpp"

#include <optional>

namespace braingk {

// Row-wise Pearson correlation. Pairs involving a constant row get
// similarity 0; the row indices are recorded in degenerate_rows.
SimilarityMatrix pearson_similarity(const Eigen::MatrixXd& data);

// exp(-gamma * ||x_i - x_j||^2) over rows. Empty gamma selects the median
// heuristic 1 / (2 * median^2) over pairwise distances.
SimilarityMatrix rbf_similarity(const Eigen::MatrixXd& data, std::optional<double> gamma = {});

double rbf_median_gamma(const Eigen::MatrixXd& data);

// Top-d principal directions (dims x d) of `samples` (rows = samples),
// ordered by decreasing variance. Sign of each direction fixed by making
// its largest-magnitude loading positive.
Eigen::MatrixXd pca_directions(const Eigen::MatrixXd& samples, int d);

// Rows as K samples in N dimensions; returns K x d projections onto the
// top-d principal directions of the centered data.
Eigen::MatrixXd pca_features(const Eigen::MatrixXd& data, int d);

// Min-max rescale of the off-diagonal entries to [0,1]; diagonal kept.
SimilarityMatrix normalize_unit_interval(SimilarityMatrix m);

}  // namespace braingk
