#pragma once

#include "braingk/types.hpp"

#include <filesystem>
#include <map>

namespace braingk {

// Binary undirected graph; labels start as node degrees.
struct LabeledGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, no self-loops
  std::vector<int> labels;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// Edge (i,j) present iff i != j and m(i,j) > threshold (strict).
LabeledGraph binarize(const SimilarityMatrix& m, double threshold);

// Picks the per-matrix threshold whose strict cut leaves roughly
// `density` * K(K-1)/2 edges; ties at the cut value reduce the count.
LabeledGraph binarize_density(const SimilarityMatrix& m, double density,
                              double* chosen_threshold = nullptr);

// Cohort-global injective compression of (own label, sorted neighbor
// labels) keys. Shared across graphs so identical neighborhoods map to
// identical ids; persisted with a run for cross-process reproducibility.
class WlLabelTable {
 public:
  int compress(const std::vector<int>& key);
  int size() const { return static_cast<int>(table_.size()); }
  void save(const std::filesystem::path& path) const;
  static WlLabelTable load(const std::filesystem::path& path);

 private:
  std::map<std::vector<int>, int> table_;
};

// Counts of compressed labels over iterations 0..h.
struct WLFeature {
  std::map<int, long long> counts;
  int h = 0;

  long long total() const;
};

WLFeature wl_features(const LabeledGraph& g, int h, WlLabelTable& table);

// Weisfeiler-Lehman subtree kernel: dot products of iteration-0..h label
// count vectors under one shared compression table.
KernelMatrix wl_kernel(const std::vector<LabeledGraph>& graphs, int h,
                       WlLabelTable* table_out = nullptr);

// Shortest-path kernel, delta variant on unweighted graphs: histogram of
// (min endpoint label, max endpoint label, BFS distance) over reachable
// unordered pairs.
KernelMatrix sp_kernel(const std::vector<LabeledGraph>& graphs);

using SpHistogram = std::map<std::tuple<int, int, int>, long long>;
SpHistogram sp_histogram(const LabeledGraph& g);

}  // namespace braingk
