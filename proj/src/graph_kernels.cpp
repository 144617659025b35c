#include "braingk/graph_kernels.hpp"

#include "braingk/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>

namespace braingk {

namespace {

LabeledGraph from_adjacency(int n, const std::vector<std::vector<bool>>& edge) {
  LabeledGraph g;
  g.n = n;
  g.adj.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && edge[i][j]) g.adj[i].push_back(j);
  g.labels.resize(n);
  for (int i = 0; i < n; ++i) g.labels[i] = g.degree(i);
  return g;
}

}  // namespace

LabeledGraph binarize(const SimilarityMatrix& m, double threshold) {
  if (!m.normalized)
    throw std::invalid_argument("binarize requires a normalized similarity matrix");
  if (threshold < 0.0 || threshold > 1.0)
    throw std::invalid_argument("threshold must lie in [0,1]");
  const int n = m.size();
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.values(i, j) > threshold) edge[i][j] = edge[j][i] = true;
  return from_adjacency(n, edge);
}

LabeledGraph binarize_density(const SimilarityMatrix& m, double density,
                              double* chosen_threshold) {
  if (!m.normalized)
    throw std::invalid_argument("binarize requires a normalized similarity matrix");
  if (density <= 0.0 || density >= 1.0)
    throw std::invalid_argument("edge density target must lie in (0,1)");
  const int n = m.size();
  std::vector<double> values;
  values.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) values.push_back(m.values(i, j));
  std::sort(values.begin(), values.end(), std::greater<>());
  const int total = static_cast<int>(values.size());
  const int want =
      std::clamp(static_cast<int>(std::lround(density * total)), 1, total - 1);
  // Cut strictly above the (want+1)-th largest value: exactly `want` edges
  // unless ties straddle the cut.
  const double t = values[want];
  if (chosen_threshold) *chosen_threshold = t;
  return binarize(m, t);
}

int WlLabelTable::compress(const std::vector<int>& key) {
  auto [it, inserted] = table_.try_emplace(key, static_cast<int>(table_.size()));
  return it->second;
}

void WlLabelTable::save(const std::filesystem::path& path) const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, id] : table_) entries.push_back({{"key", key}, {"id", id}});
  io::atomic_write_text(path, nlohmann::json{{"entries", entries}}.dump(2) + "\n");
}

WlLabelTable WlLabelTable::load(const std::filesystem::path& path) {
  const auto j = nlohmann::json::parse(io::read_text(path));
  WlLabelTable t;
  for (const auto& e : j.at("entries"))
    t.table_[e.at("key").get<std::vector<int>>()] = e.at("id").get<int>();
  return t;
}

long long WLFeature::total() const {
  long long sum = 0;
  for (const auto& [id, c] : counts) sum += c;
  return sum;
}

WLFeature wl_features(const LabeledGraph& g, int h, WlLabelTable& table) {
  if (h < 0) throw std::invalid_argument("WL iteration depth must be >= 0");
  WLFeature feature;
  feature.h = h;

  // Iteration 0: the degree labels themselves go through the table so ids
  // stay concordant across graphs.
  std::vector<int> current(g.n);
  for (int v = 0; v < g.n; ++v) {
    current[v] = table.compress({g.labels[v]});
    ++feature.counts[current[v]];
  }

  for (int it = 1; it <= h; ++it) {
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> key;
      key.reserve(g.degree(v) + 1);
      key.push_back(current[v]);
      std::vector<int> neigh;
      neigh.reserve(g.degree(v));
      for (int u : g.adj[v]) neigh.push_back(current[u]);
      std::sort(neigh.begin(), neigh.end());
      key.insert(key.end(), neigh.begin(), neigh.end());
      next[v] = table.compress(key);
      ++feature.counts[next[v]];
    }
    current = std::move(next);
  }
  return feature;
}

namespace {

template <typename K>
double feature_dot(const std::map<K, long long>& a, const std::map<K, long long>& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      sum += static_cast<double>(ia->second) * static_cast<double>(ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum;
}

}  // namespace

KernelMatrix wl_kernel(const std::vector<LabeledGraph>& graphs, int h, WlLabelTable* table_out) {
  const int l = static_cast<int>(graphs.size());
  WlLabelTable table;
  std::vector<WLFeature> features;
  features.reserve(l);
  for (const auto& g : graphs) features.push_back(wl_features(g, h, table));

  KernelMatrix k;
  k.kind = "wl";
  k.values.resize(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = a; b < l; ++b) {
      const double v = feature_dot(features[a].counts, features[b].counts);
      k.values(a, b) = v;
      k.values(b, a) = v;
    }
  if (table_out) *table_out = std::move(table);
  return k;
}

SpHistogram sp_histogram(const LabeledGraph& g) {
  SpHistogram hist;
  constexpr int unreachable = -1;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> d(g.n, unreachable);
    std::deque<int> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : g.adj[v])
        if (d[u] == unreachable) {
          d[u] = d[v] + 1;
          queue.push_back(u);
        }
    }
    for (int t = s + 1; t < g.n; ++t)
      if (d[t] != unreachable)
        ++hist[{std::min(g.labels[s], g.labels[t]), std::max(g.labels[s], g.labels[t]), d[t]}];
  }
  return hist;
}

KernelMatrix sp_kernel(const std::vector<LabeledGraph>& graphs) {
  const int l = static_cast<int>(graphs.size());
  std::vector<SpHistogram> hists;
  hists.reserve(l);
  for (const auto& g : graphs) hists.push_back(sp_histogram(g));

  KernelMatrix k;
  k.kind = "sp";
  k.values.resize(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = a; b < l; ++b) {
      const double v = feature_dot(hists[a], hists[b]);
      k.values(a, b) = v;
      k.values(b, a) = v;
    }
  return k;
}

}  // namespace braingk
