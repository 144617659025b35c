#include "braingk/similarity.hpp"

#include <doctest.h>

#include <random>

using namespace braingk;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

}  // namespace

TEST_CASE("pearson similarity basics") {
  Eigen::MatrixXd data(3, 4);
  data << 1, 2, 3, 4,     // row 0
      5, 7, 9, 11,        // 2*row0 + 3
      -1, -2, -3, -4;     // -row0
  const auto s = pearson_similarity(data);
  CHECK(s.values(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.values(0, 2) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.values(0, 0) == 1.0);
  CHECK((s.values - s.values.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pearson value against direct covariance computation") {
  Eigen::MatrixXd data(2, 4);
  data << 1, 2, 3, 4, 1, 2, 3, 5;
  const auto s = pearson_similarity(data);
  // Direct oracle: cov / (std_i * std_j), population convention.
  const Eigen::VectorXd a = data.row(0), b = data.row(1);
  const double ma = a.mean(), mb = b.mean();
  double cov = 0, va = 0, vb = 0;
  for (int i = 0; i < 4; ++i) {
    cov += (a(i) - ma) * (b(i) - mb);
    va += (a(i) - ma) * (a(i) - ma);
    vb += (b(i) - mb) * (b(i) - mb);
  }
  const double expected = cov / std::sqrt(va * vb);
  CHECK(expected == doctest::Approx(0.9827).epsilon(1e-4));
  CHECK(s.values(0, 1) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("pearson treats constant rows as unconnected") {
  Eigen::MatrixXd data(3, 5);
  data << 1, 2, 3, 4, 5, 7, 7, 7, 7, 7, 2, 1, 2, 1, 2;
  const auto s = pearson_similarity(data);
  REQUIRE(s.degenerate_rows == std::vector<int>{1});
  CHECK(s.values.row(1).isZero(0.0));
  CHECK(s.values.col(1).isZero(0.0));
  CHECK(s.values(0, 0) == 1.0);
}

TEST_CASE("pearson is invariant under positive affine maps of rows") {
  Eigen::MatrixXd data = random_matrix(5, 30, 11);
  const auto base = pearson_similarity(data);
  Eigen::MatrixXd scaled = data;
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int i = 0; i < 5; ++i) scaled.row(i) = (u(rng) * data.row(i).array() + u(rng)).matrix();
  const auto mapped = pearson_similarity(scaled);
  CHECK((base.values - mapped.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("rbf similarity direct values and limits") {
  Eigen::MatrixXd data(2, 2);
  data << 0, 0, 1, 1;
  const auto s = rbf_similarity(data, 0.5);
  CHECK(s.values(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(s.values(0, 0) == 1.0);

  // gamma -> 0+ sends every entry to 1
  const auto flat = rbf_similarity(random_matrix(4, 6, 3), 1e-15);
  CHECK((flat.values.array() - 1.0).abs().maxCoeff() < 1e-9);

  Eigen::MatrixXd dup(3, 2);
  dup << 1, 2, 1, 2, 1, 2;
  CHECK_THROWS_WITH_AS(rbf_similarity(dup), doctest::Contains("gamma"), std::runtime_error);
}

TEST_CASE("rbf is strictly decreasing in distance") {
  Eigen::MatrixXd data(3, 1);
  data << 0, 1, 3;
  const auto s = rbf_similarity(data, 0.7);
  CHECK(s.values(0, 1) > s.values(0, 2));
  CHECK(s.values(0, 1) > s.values(1, 2));  // distance 1 vs 2
  CHECK(s.values(0, 2) < s.values(1, 2));
}

TEST_CASE("rbf median-heuristic gamma matches a hand computation") {
  Eigen::MatrixXd data(3, 1);
  data << 0, 1, 3;  // pairwise distances 1, 2, 3 -> median 2
  CHECK(rbf_median_gamma(data) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("pca reconstructs centered data with all components") {
  const Eigen::MatrixXd data = random_matrix(6, 5, 21);
  const int d = 5;
  const Eigen::MatrixXd proj = pca_features(data, d);
  const Eigen::MatrixXd dirs = pca_directions(data, d);
  const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  CHECK((proj * dirs.transpose() - centered).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("pca on rank-1 data concentrates all variance in component 1") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  Eigen::VectorXd direction(4);
  direction << 1, -2, 0.5, 3;
  Eigen::MatrixXd data(8, 4);
  for (int i = 0; i < 8; ++i) data.row(i) = g(rng) * direction.transpose();
  const Eigen::MatrixXd proj = pca_features(data, 1);
  const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  CHECK(proj.squaredNorm() == doctest::Approx(centered.squaredNorm()).epsilon(1e-9));
}

TEST_CASE("pca is row-equivariant") {
  const Eigen::MatrixXd data = random_matrix(5, 7, 31);
  Eigen::MatrixXd permuted(5, 7);
  const int perm[5] = {3, 0, 4, 1, 2};
  for (int i = 0; i < 5; ++i) permuted.row(i) = data.row(perm[i]);
  const Eigen::MatrixXd a = pca_features(data, 3);
  const Eigen::MatrixXd b = pca_features(permuted, 3);
  for (int i = 0; i < 5; ++i)
    CHECK((b.row(i) - a.row(perm[i])).cwiseAbs().maxCoeff() < 1e-9);

  CHECK_THROWS_AS(pca_features(data, 0), std::invalid_argument);
  CHECK_THROWS_AS(pca_features(data, 6), std::invalid_argument);
}

TEST_CASE("normalize_unit_interval rescales off-diagonal entries") {
  SimilarityMatrix m;
  m.values.resize(3, 3);
  m.values << 1, -1, 0, -1, 1, 1, 0, 1, 1;
  const auto n = normalize_unit_interval(m);
  CHECK(n.normalized);
  CHECK(n.values(0, 1) == 0.0);
  CHECK(n.values(0, 2) == 0.5);
  CHECK(n.values(1, 2) == 1.0);
  CHECK(n.values(0, 0) == 1.0);  // diagonal untouched

  SimilarityMatrix spread;
  spread.values.resize(3, 3);
  spread.values << 0, 0.2, 0.4, 0.2, 0, 0.6, 0.4, 0.6, 0;
  const auto s = normalize_unit_interval(spread);
  CHECK(s.values(0, 1) == doctest::Approx(0.0));
  CHECK(s.values(0, 2) == doctest::Approx(0.5));
  CHECK(s.values(1, 2) == doctest::Approx(1.0));
}

TEST_CASE("normalize_unit_interval fixed point and degeneracy") {
  SimilarityMatrix m;
  m.values.resize(3, 3);
  m.values << 1, 0, 0.25, 0, 1, 1, 0.25, 1, 1;
  const auto n = normalize_unit_interval(m);
  CHECK((n.values - m.values).cwiseAbs().maxCoeff() == 0.0);

  SimilarityMatrix flat;
  flat.values = Eigen::MatrixXd::Constant(4, 4, 0.3);
  CHECK_THROWS_WITH_AS(normalize_unit_interval(flat), doctest::Contains("degenerate"),
                       std::runtime_error);
}

TEST_CASE("normalization preserves strict ordering of off-diagonal entries") {
  const Eigen::MatrixXd data = random_matrix(6, 40, 17);
  auto raw = pearson_similarity(data);
  const auto norm = normalize_unit_interval(raw);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          if (raw.values(i, j) < raw.values(a, b))
            CHECK(norm.values(i, j) < norm.values(a, b));
        }
}
