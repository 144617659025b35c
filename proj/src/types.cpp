#include "braingk/types.hpp"

namespace braingk {

const char* to_string(SimilarityMethod m) {
  switch (m) {
    case SimilarityMethod::Correlation: return "correlation";
    case SimilarityMethod::RBF: return "rbf";
    case SimilarityMethod::PcaRbf: return "pca";
    case SimilarityMethod::L1Graph: return "l1";
    case SimilarityMethod::Persistence: return "persistence";
  }
  return "?";
}

SimilarityMethod similarity_method_from_string(const std::string& s) {
  if (s == "correlation") return SimilarityMethod::Correlation;
  if (s == "rbf") return SimilarityMethod::RBF;
  if (s == "pca") return SimilarityMethod::PcaRbf;
  if (s == "l1") return SimilarityMethod::L1Graph;
  if (s == "persistence") return SimilarityMethod::Persistence;
  throw std::invalid_argument("unknown similarity method: " + s);
}

}  // namespace braingk
