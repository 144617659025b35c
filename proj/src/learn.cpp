#include "braingk/learn.hpp"

#include <algorithm>
#include <cstdio>

namespace braingk {

Eigen::VectorXd vectorize_upper(const SimilarityMatrix& m) {
  const int k = m.size();
  Eigen::VectorXd v(static_cast<long>(k) * (k - 1) / 2);
  int idx = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) v(idx++) = m.values(i, j);
  return v;
}

KernelMatrix linear_kernel(const std::vector<Eigen::VectorXd>& features) {
  const int l = static_cast<int>(features.size());
  for (int i = 1; i < l; ++i)
    if (features[i].size() != features[0].size())
      throw std::invalid_argument("linear_kernel: feature length mismatch at subject " +
                                  std::to_string(i));
  KernelMatrix k;
  k.kind = "linear";
  k.values.resize(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = a; b < l; ++b) {
      const double v = features[a].dot(features[b]);
      k.values(a, b) = v;
      k.values(b, a) = v;
    }
  return k;
}

KernelMatrix normalize_kernel(const KernelMatrix& k) {
  const int l = k.size();
  Eigen::VectorXd d(l);
  for (int i = 0; i < l; ++i) {
    d(i) = k.values(i, i);
    if (!(d(i) > 0.0))
      throw std::runtime_error("degenerate subject " + std::to_string(i) +
                               ": zero self-similarity, cannot normalize kernel '" + k.kind + "'");
  }
  KernelMatrix out;
  out.kind = k.kind;
  out.normalized = true;
  out.values.resize(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) out.values(a, b) = k.values(a, b) / std::sqrt(d(a) * d(b));
  return out;
}

KernelMatrix sum_kernel(const std::vector<KernelMatrix>& kernels,
                        const std::vector<double>& weights) {
  if (kernels.empty()) throw std::invalid_argument("sum_kernel needs at least one kernel");
  if (kernels.size() != weights.size())
    throw std::invalid_argument("sum_kernel: weight count does not match kernel count");
  const int l = kernels.front().size();
  double total = 0.0;
  for (size_t i = 0; i < kernels.size(); ++i) {
    if (kernels[i].size() != l) throw std::invalid_argument("sum_kernel: kernel size mismatch");
    if (!kernels[i].normalized)
      throw std::invalid_argument("sum_kernel inputs must be normalized kernels");
    if (weights[i] < 0.0) throw std::invalid_argument("sum_kernel weights must be nonnegative");
    total += weights[i];
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("sum_kernel weights must sum to 1");

  KernelMatrix out;
  out.kind = "sum(";
  out.values = Eigen::MatrixXd::Zero(l, l);
  for (size_t i = 0; i < kernels.size(); ++i) {
    out.values += weights[i] * kernels[i].values;
    out.kind += (i ? "," : "") + kernels[i].kind;
  }
  out.kind += ")";
  out.normalized = true;  // convex combination of unit-diagonal kernels
  return out;
}

double SVMModel::dual_objective(const Eigen::MatrixXd& kernel) const {
  const int l = static_cast<int>(alpha.size());
  Eigen::VectorXd ay(l);
  for (int i = 0; i < l; ++i) ay(i) = alpha(i) * y[i];
  return alpha.sum() - 0.5 * ay.dot(kernel * ay);
}

SVMModel train_svm(const Eigen::MatrixXd& kernel, const std::vector<int>& y,
                   const SvmConfig& cfg) {
  const int l = static_cast<int>(y.size());
  if (kernel.rows() != l || kernel.cols() != l)
    throw std::invalid_argument("train_svm: kernel size does not match label count");
  if (!(cfg.C > 0.0)) throw std::invalid_argument("train_svm: C must be positive");
  bool has_pos = false, has_neg = false;
  for (int v : y) {
    if (v == 1) has_pos = true;
    else if (v == -1) has_neg = true;
    else throw std::invalid_argument("train_svm labels must be +1/-1");
  }
  if (!has_pos || !has_neg)
    throw std::invalid_argument("train_svm needs at least one subject per class");

  SVMModel model;
  model.y = y;
  model.C = cfg.C;
  model.alpha = Eigen::VectorXd::Zero(l);
  // Gradient of 1/2 a^T Q a - e^T a at a = 0.
  Eigen::VectorXd grad = Eigen::VectorXd::Constant(l, -1.0);

  const double C = cfg.C;
  double violation = 0.0;
  for (long step = 0;; ++step) {
    // Maximal violating pair over I_up / I_low.
    int i = -1, j = -1;
    double up = -std::numeric_limits<double>::infinity();
    double low = std::numeric_limits<double>::infinity();
    for (int t = 0; t < l; ++t) {
      const double v = -y[t] * grad(t);
      const bool in_up = (y[t] == 1 && model.alpha(t) < C) || (y[t] == -1 && model.alpha(t) > 0);
      const bool in_low = (y[t] == 1 && model.alpha(t) > 0) || (y[t] == -1 && model.alpha(t) < C);
      if (in_up && v > up) {
        up = v;
        i = t;
      }
      if (in_low && v < low) {
        low = v;
        j = t;
      }
    }
    violation = up - low;
    if (i < 0 || j < 0 || violation <= cfg.tol) break;
    if (step >= cfg.max_iter)
      throw ConvergenceError("SVM did not converge: KKT violation " + std::to_string(violation) +
                                 " after " + std::to_string(cfg.max_iter) + " updates",
                             violation);

    // Move along alpha_i += y_i t, alpha_j -= y_j t; the equality
    // constraint is preserved exactly.
    double quad = kernel(i, i) + kernel(j, j) - 2.0 * kernel(i, j);
    quad = std::max(quad, 1e-12);
    double t = violation / quad;
    const double cap_i = y[i] == 1 ? C - model.alpha(i) : model.alpha(i);
    const double cap_j = y[j] == 1 ? model.alpha(j) : C - model.alpha(j);
    t = std::min(t, std::min(cap_i, cap_j));

    model.alpha(i) += y[i] * t;
    model.alpha(j) -= y[j] * t;
    for (int kdx = 0; kdx < l; ++kdx)
      grad(kdx) += y[kdx] * t * (kernel(kdx, i) - kernel(kdx, j));
  }
  model.kkt_violation = std::max(violation, 0.0);

  // Bias from free support vectors, else the midpoint of the KKT bounds.
  double bias_sum = 0.0;
  int bias_count = 0;
  for (int t = 0; t < l; ++t) {
    if (model.alpha(t) > 0.0) model.support.push_back(t);
    if (model.alpha(t) > 0.0 && model.alpha(t) < C) {
      bias_sum += -y[t] * grad(t);
      ++bias_count;
    }
  }
  if (bias_count > 0) {
    model.bias = bias_sum / bias_count;
  } else {
    double up = -std::numeric_limits<double>::infinity();
    double low = std::numeric_limits<double>::infinity();
    for (int t = 0; t < l; ++t) {
      const double v = -y[t] * grad(t);
      const bool in_up = (y[t] == 1 && model.alpha(t) < C) || (y[t] == -1 && model.alpha(t) > 0);
      const bool in_low = (y[t] == 1 && model.alpha(t) > 0) || (y[t] == -1 && model.alpha(t) < C);
      if (in_up) up = std::max(up, v);
      if (in_low) low = std::min(low, v);
    }
    model.bias = 0.5 * (up + low);
  }
  return model;
}

double predict(const SVMModel& model, const Eigen::VectorXd& kernel_row) {
  if (kernel_row.size() != model.alpha.size())
    throw std::invalid_argument("predict: kernel row length " + std::to_string(kernel_row.size()) +
                                " does not match training size " +
                                std::to_string(model.alpha.size()));
  double f = model.bias;
  for (int i : model.support) f += model.alpha(i) * model.y[i] * kernel_row(i);
  return f;
}

MulticlassModel train_multiclass(const Eigen::MatrixXd& kernel,
                                 const std::vector<SeverityClass>& labels, const SvmConfig& cfg) {
  const int l = static_cast<int>(labels.size());
  MulticlassModel model;
  for (int c = 0; c < 3; ++c) {
    std::vector<int> y(l);
    int positives = 0;
    for (int i = 0; i < l; ++i) {
      y[i] = labels[i] == static_cast<SeverityClass>(c) ? 1 : -1;
      positives += y[i] == 1;
    }
    if (positives == 0 || positives == l) {
      model.warnings.push_back(std::string("class ") + to_string(static_cast<SeverityClass>(c)) +
                               " not separable in training fold (" + std::to_string(positives) +
                               " positives); machine disabled");
      continue;
    }
    auto machine = train_svm(kernel, y, cfg);
    machine.tag = std::string(to_string(static_cast<SeverityClass>(c))) + "-vs-rest";
    model.machines[c] = std::move(machine);
  }
  return model;
}

SeverityClass multiclass_decide(const MulticlassModel& model, const Eigen::VectorXd& kernel_row,
                                std::array<double, 3>* decisions) {
  std::array<double, 3> d;
  for (int c = 0; c < 3; ++c)
    d[c] = model.machines[c] ? predict(*model.machines[c], kernel_row)
                             : -std::numeric_limits<double>::infinity();
  if (decisions) *decisions = d;
  int best = 0;
  for (int c = 1; c < 3; ++c)
    if (d[c] > d[best]) best = c;  // strict: ties stay with the milder class
  return static_cast<SeverityClass>(best);
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string format_accuracy(int correct, int total) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * correct / total);
  return buf;
}

double EvalReport::accuracy_percent() const {
  return 100.0 * confusion.trace() / std::max(1, size());
}

nlohmann::json EvalReport::to_json() const {
  nlohmann::json subjects = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    nlohmann::json s{{"true", to_string(truth[i])},
                     {"predicted", to_string(predicted[i])},
                     {"decision", decisions[i]}};
    if (i < static_cast<int>(ids.size())) s["id"] = ids[i];
    subjects.push_back(std::move(s));
  }
  std::array<std::array<int, 3>, 3> conf{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) conf[r][c] = confusion(r, c);
  return nlohmann::json{{"subjects", subjects},
                        {"confusion", conf},
                        {"correct", confusion.trace()},
                        {"total", size()},
                        {"accuracy", round2(accuracy_percent())},
                        {"warnings", warnings},
                        {"config", config}};
}

EvalReport loo_evaluate(const KernelMatrix& kernel, const std::vector<SeverityClass>& labels,
                        const SvmConfig& cfg, const std::vector<std::string>& ids) {
  const int l = static_cast<int>(labels.size());
  if (l < 3) throw std::invalid_argument("leave-one-out needs at least 3 subjects");
  if (kernel.size() != l)
    throw std::invalid_argument("loo_evaluate: kernel size does not match label count");

  EvalReport report;
  report.ids = ids;
  report.truth = labels;
  report.predicted.resize(l);
  report.decisions.resize(l);
  report.confusion.setZero();

  bool any_signal = false;
  for (int held = 0; held < l; ++held) {
    Eigen::MatrixXd sub(l - 1, l - 1);
    Eigen::VectorXd row(l - 1);
    std::vector<SeverityClass> fold_labels;
    fold_labels.reserve(l - 1);
    int a = 0;
    for (int i = 0; i < l; ++i) {
      if (i == held) continue;
      row(a) = kernel.values(held, i);
      fold_labels.push_back(labels[i]);
      int b = 0;
      for (int j = 0; j < l; ++j) {
        if (j == held) continue;
        sub(a, b++) = kernel.values(i, j);
      }
      ++a;
    }
    if (row.cwiseAbs().maxCoeff() > 0.0) any_signal = true;

    try {
      const MulticlassModel fold = train_multiclass(sub, fold_labels, cfg);
      for (const auto& w : fold.warnings)
        if (std::find(report.warnings.begin(), report.warnings.end(), w) == report.warnings.end())
          report.warnings.push_back(w);
      report.predicted[held] = multiclass_decide(fold, row, &report.decisions[held]);
    } catch (const std::exception& e) {
      throw std::runtime_error("fold " + std::to_string(held) + ": " + e.what());
    }
    report.confusion(static_cast<int>(labels[held]), static_cast<int>(report.predicted[held]))++;
  }
  if (!any_signal) report.warnings.emplace_back("uninformative kernel: all test rows are zero");
  return report;
}

std::pair<double, double> eigen_range(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

}  // namespace braingk
