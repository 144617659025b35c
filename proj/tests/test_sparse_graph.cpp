#include "braingk/sparse_graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace braingk;

namespace {

Eigen::MatrixXd random_dictionary(int n, int k, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) x(i, j) = g(rng);
  for (int j = 0; j < k; ++j) x.col(j).normalize();
  return x;
}

}  // namespace

TEST_CASE("large lambda kills every coordinate") {
  const Eigen::MatrixXd x = random_dictionary(20, 6, 1);
  SolverConfig cfg;
  cfg.lambda = 10.0;  // > 2 max |x_j . x_i| for unit columns
  const auto code = solve_nonneg_lasso(x, 0, cfg);
  CHECK(code.coefficients.isZero(0.0));
  CHECK(code.kkt_residual <= cfg.tol);
}

TEST_CASE("duplicate column recovers the 1-D closed form 1 - lambda/2") {
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(30, 5);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 5; ++j) x(i, j) = g(rng);
  for (int j = 0; j < 5; ++j) x.col(j).normalize();
  // Make the columns near-orthogonal, then plant an exact duplicate.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  x = qr.householderQ() * Eigen::MatrixXd::Identity(30, 5);
  x.col(3) = x.col(0);

  SolverConfig cfg;
  cfg.lambda = 0.01;
  const auto code = solve_nonneg_lasso(x, 0, cfg);
  CHECK(code.coefficients(3) == doctest::Approx(0.995).epsilon(1e-9));
  for (int j : {1, 2, 4}) CHECK(code.coefficients(j) == doctest::Approx(0.0).epsilon(1e-9));

  // Projected-gradient oracle lands on the same solution.
  const Eigen::VectorXd pg = oracles::lasso_pg_oracle(x, 0, cfg.lambda, 20000);
  CHECK((pg - code.coefficients).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("lambda=0 with the target in a nonnegative span reaches zero residual") {
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  Eigen::MatrixXd x(25, 4);
  for (int i = 0; i < 25; ++i)
    for (int j = 1; j < 4; ++j) x(i, j) = g(rng);
  x.col(0) = 0.4 * x.col(1) + 1.7 * x.col(3);

  SolverConfig cfg;
  cfg.lambda = 0.0;
  cfg.tol = 1e-10;
  const auto code = solve_nonneg_lasso(x, 0, cfg);
  const Eigen::VectorXd residual = x.col(0) - x * code.coefficients;
  CHECK(residual.norm() <= 1e-6);

  // Brute-force QP oracle on the same instance agrees on the objective.
  const Eigen::VectorXd pg = oracles::lasso_pg_oracle(x, 0, 0.0, 50000);
  CHECK(oracles::lasso_objective(x, 0, 0.0, code.coefficients) <=
        oracles::lasso_objective(x, 0, 0.0, pg) + 1e-8);
}

TEST_CASE("kkt certificate holds on random instances and objective is monotone") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    const int k = 3 + static_cast<int>(seed % 8);
    const Eigen::MatrixXd x = random_dictionary(15 + seed, k, 100 + seed);
    SolverConfig cfg;
    cfg.lambda = 0.05 + 0.01 * (seed % 5);
    const int target = seed % k;
    const auto code = solve_nonneg_lasso(x, target, cfg);

    CHECK(code.coefficients.minCoeff() >= 0.0);
    CHECK(code.coefficients(target) == 0.0);
    // Independent recomputation of the certificate.
    CHECK(lasso_kkt_residual(x, target, code.coefficients, cfg.lambda) <= cfg.tol);

    for (size_t s = 1; s < code.objective_history.size(); ++s)
      CHECK(code.objective_history[s] <=
            code.objective_history[s - 1] + 1e-10 * (1.0 + std::abs(code.objective_history[s - 1])));
  }
}

TEST_CASE("solver is deterministic") {
  const Eigen::MatrixXd x = random_dictionary(40, 12, 9);
  SolverConfig cfg;
  const auto a = solve_nonneg_lasso(x, 4, cfg);
  const auto b = solve_nonneg_lasso(x, 4, cfg);
  CHECK(a.coefficients == b.coefficients);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("l1 norm of the solution shrinks as lambda grows") {
  const Eigen::MatrixXd x = random_dictionary(30, 10, 33);
  SolverConfig lo, hi;
  lo.lambda = 0.05;
  hi.lambda = 0.5;
  const auto a_lo = solve_nonneg_lasso(x, 2, lo);
  const auto a_hi = solve_nonneg_lasso(x, 2, hi);
  CHECK(a_hi.coefficients.sum() <= a_lo.coefficients.sum() + lo.tol);
}

TEST_CASE("convergence error carries the residual") {
  const Eigen::MatrixXd x = random_dictionary(30, 10, 41);
  SolverConfig cfg;
  cfg.tol = 1e-14;
  cfg.max_iter = 1;
  try {
    solve_nonneg_lasso(x, 0, cfg);
    // One sweep may legitimately land inside tol for easy instances, but
    // not at 1e-14 on this one.
    FAIL("expected convergence failure");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual > 1e-14);
  }
}

TEST_CASE("l1_graph on orthogonal rows is all zero") {
  // Orthogonal unit rows: nothing can code anything else.
  Eigen::MatrixXd data = Eigen::MatrixXd::Identity(4, 8);
  SolverConfig cfg;
  cfg.lambda = 0.1;
  const auto w = l1_graph(data, cfg);
  CHECK(w.values.isZero(0.0));
  CHECK(w.method == SimilarityMethod::L1Graph);
}

TEST_CASE("duplicate rows produce one strong symmetric edge") {
  Eigen::MatrixXd data(3, 6);
  data << 1, 0, 1, 0, 1, 0,  // x
      1, 0, 1, 0, 1, 0,      // x again
      0, 1, 0, -1, 0, 1;     // orthogonal to x
  SolverConfig cfg;
  cfg.lambda = 0.01;
  const auto w = l1_graph(data, cfg);
  CHECK(w.values(0, 1) == doctest::Approx(0.995).epsilon(1e-9));
  CHECK(w.values(0, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.values(1, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.values.diagonal().isZero(0.0));
  CHECK((w.values - w.values.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("l1_graph output is symmetric with zero diagonal on random data") {
  std::mt19937 rng(55);
  std::normal_distribution<double> g;
  Eigen::MatrixXd data(6, 30);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 30; ++j) data(i, j) = g(rng);
  SolverConfig cfg;
  const auto w = l1_graph(data, cfg);
  CHECK((w.values - w.values.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(w.values.diagonal().isZero(0.0));
  CHECK(w.values.minCoeff() >= 0.0);
}
