#pragma once

#include "braingk/types.hpp"

#include <filesystem>
#include <optional>

namespace braingk {

// Points in R^m; row t = one delay-embedded observation.
struct PointCloud {
  Eigen::MatrixXd points;

  int size() const { return static_cast<int>(points.rows()); }
  int dim() const { return static_cast<int>(points.cols()); }
};

// Point t = (x_t, x_{t+tau}, ..., x_{t+(m-1)tau}); N - (m-1)tau points.
PointCloud delay_embed(const Eigen::VectorXd& series, int m, int tau);

struct RipsResult {
  PersistenceDiagram h0;  // all births 0
  PersistenceDiagram h1;
  double max_scale = 0.0;
};

// Vietoris-Rips persistence up to H1 over Z/2. Empty max_scale means the
// max pairwise distance, which leaves exactly one essential H0 class and
// no truncated H1 deaths. H0 runs union-find over edges sorted ascending;
// H1 reduces triangle boundary columns over the ordered edge basis.
// Zero-persistence H1 pairs are dropped; every H0 merge is kept so the bar
// count equals the point count.
RipsResult rips_persistence(const PointCloud& cloud, std::optional<double> max_scale = {});

// Persistence scale-space kernel: (1/8*pi*sigma) * sum over (p,q) of
// exp(-||p-q||^2 / 8*sigma) - exp(-||p-qbar||^2 / 8*sigma), with qbar the
// mirror of q across the diagonal. Diagrams must contain finite pairs only.
double pssk(const PersistenceDiagram& f, const PersistenceDiagram& g, double sigma);

enum class EssentialPolicy { Drop, Cap };

struct PersistenceParams {
  int m = 2;
  int tau = 3;
  double sigma = 0.5;
  EssentialPolicy essential = EssentialPolicy::Drop;
};

// One Betti-1 diagram per region from its delay embedding; entry (i,j) is
// the scale-space kernel between the region diagrams, zero diagonal.
SimilarityMatrix persistence_similarity(const SubjectRecord& subject, const PersistenceParams& p);

// The per-region diagrams backing persistence_similarity.
std::vector<PersistenceDiagram> region_diagrams(const SubjectRecord& subject,
                                                const PersistenceParams& p);

// Rows of `dimension,birth,death`; infinite deaths serialized as `inf`.
void write_diagrams_csv(const std::filesystem::path& path,
                        const std::vector<PersistenceDiagram>& diagrams);

}  // namespace braingk
