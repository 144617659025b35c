#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace braingk {

// ADOS severity bins. Order matters: it is the multiclass tie-break order.
enum class SeverityClass { Mild = 0, Moderate = 1, Severe = 2 };

inline const char* to_string(SeverityClass c) {
  switch (c) {
    case SeverityClass::Mild: return "mild";
    case SeverityClass::Moderate: return "moderate";
    case SeverityClass::Severe: return "severe";
  }
  return "?";
}

SeverityClass severity_from_string(const std::string& s);

// One subject: K region time series of N samples each, rows = regions.
struct SubjectRecord {
  std::string id;
  std::string site;
  int ados = 0;
  Eigen::MatrixXd data;

  int regions() const { return static_cast<int>(data.rows()); }
  int samples() const { return static_cast<int>(data.cols()); }
};

struct Cohort {
  std::vector<SubjectRecord> subjects;

  int size() const { return static_cast<int>(subjects.size()); }
  // Shared region count; subjects are validated to agree on load.
  int regions() const { return subjects.empty() ? 0 : subjects.front().regions(); }
};

enum class SimilarityMethod { Correlation, RBF, PcaRbf, L1Graph, Persistence };

const char* to_string(SimilarityMethod m);
SimilarityMethod similarity_method_from_string(const std::string& s);

// K x K symmetric similarity between region time series of one subject.
struct SimilarityMatrix {
  Eigen::MatrixXd values;
  SimilarityMethod method = SimilarityMethod::Correlation;
  bool normalized = false;
  // Regions whose series were constant (similarity forced to 0).
  std::vector<int> degenerate_rows;

  int size() const { return static_cast<int>(values.rows()); }
};

// L x L subject-by-subject Gram matrix.
struct KernelMatrix {
  Eigen::MatrixXd values;
  std::string kind;
  bool normalized = false;

  int size() const { return static_cast<int>(values.rows()); }
};

struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;
};

inline bool operator==(const PersistencePair& a, const PersistencePair& b) {
  return a.birth == b.birth && a.death == b.death;
}

// Multiset of (birth, death) scales for one homology dimension.
// Essential classes carry death = +inf until dropped or capped.
struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;
  int dimension = 0;

  int size() const { return static_cast<int>(pairs.size()); }

  PersistenceDiagram drop_infinite() const {
    PersistenceDiagram out;
    out.dimension = dimension;
    for (const auto& p : pairs)
      if (std::isfinite(p.death)) out.pairs.push_back(p);
    return out;
  }

  // Replaces infinite deaths by `scale`. A capped pair that lands on the
  // diagonal is harmless downstream: it contributes zero to the scale-space
  // kernel.
  PersistenceDiagram cap_infinite(double scale) const {
    PersistenceDiagram out;
    out.dimension = dimension;
    out.pairs.reserve(pairs.size());
    for (auto p : pairs) {
      if (!std::isfinite(p.death)) p.death = scale;
      out.pairs.push_back(p);
    }
    return out;
  }
};

}  // namespace braingk
