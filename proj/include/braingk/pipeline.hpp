#pragma once

#include "braingk/data_model.hpp"
#include "braingk/graph_kernels.hpp"
#include "braingk/learn.hpp"
#include "braingk/sparse_graph.hpp"
#include "braingk/topology.hpp"
#include "braingk/types.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace braingk {

// Full run configuration; every report embeds the resolved snapshot.
struct RunConfig {
  std::string method = "correlation";  // correlation|rbf|pca|l1|persistence|sum
  bool znormalize = true;
  std::string threshold_mode = "fixed";  // fixed|density
  double threshold = 0.5;
  double density = 0.2;

  int tde_m = 2;
  int tde_tau = 3;
  double pssk_sigma = 0.5;
  std::string pssk_essential = "drop";  // drop|cap
  std::optional<double> rbf_gamma;      // empty = median heuristic
  int pca_d = 0;                        // 0 = min(10, K, N)
  std::string pca_axis = "regions";     // regions|time
  SolverConfig lasso;
  int wl_h = 3;
  SvmConfig svm;
  std::vector<std::string> sum_components{"persistence", "l1"};
  std::vector<double> sum_weights{0.5, 0.5};

  bool normalize_kernels = true;
  std::string kernel = "all";  // all|wl|sp|linear (compute-kernel emission)
  std::uint64_t seed = 0;
  std::string manifest;
  std::string out = "out";
  int jobs = 0;  // 0 = hardware concurrency
  bool dump_diagrams = false;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);  // rejects unknown keys
  void validate() const;
};

RunConfig load_config_file(const std::filesystem::path& path);

// Raw similarity for one subject under the configured method, then min-max
// normalized to the unit interval.
SimilarityMatrix build_similarity(const SubjectRecord& subject, const RunConfig& cfg);

struct GraphArtifacts {
  Cohort cohort;
  std::vector<SimilarityMatrix> graphs;  // normalized, manifest order
  int built = 0;
  int skipped = 0;
};

// Loads cached per-subject graph artifacts when their config and data
// hashes match, builds and writes the rest.
GraphArtifacts ensure_graphs(const RunConfig& cfg);

struct KernelSet {
  KernelMatrix linear;  // traditional baseline on vectorized features
  KernelMatrix wl;
  KernelMatrix sp;
  WlLabelTable wl_table;
  std::vector<double> chosen_thresholds;  // per subject (density mode)
};

KernelSet compute_kernels(const GraphArtifacts& artifacts, const RunConfig& cfg);

// Fingerprints used to reject artifacts from a different configuration.
std::string graph_stage_hash(const RunConfig& cfg);
std::string kernel_stage_hash(const RunConfig& cfg, const Cohort& cohort);

void cmd_synth(std::uint64_t seed, int L, int K, int N, const std::filesystem::path& out);
void cmd_build_graphs(const RunConfig& cfg);
void cmd_compute_kernel(const RunConfig& cfg);

// Runs LOO under both the traditional and the graph-kernel path, writes
// the two-column report JSON, and returns it.
nlohmann::json cmd_evaluate(const RunConfig& cfg);

// Renders evaluate reports as the Feature | Traditional | Graph table.
std::string render_report_table(const std::vector<nlohmann::json>& reports);

std::filesystem::path evaluate_report_path(const RunConfig& cfg);

}  // namespace braingk
