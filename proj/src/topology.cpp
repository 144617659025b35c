#include "braingk/topology.hpp"

#include "braingk/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braingk {

PointCloud delay_embed(const Eigen::VectorXd& series, int m, int tau) {
  const int n = static_cast<int>(series.size());
  if (m < 1) throw std::invalid_argument("embedding dimension m must be >= 1");
  if (tau < 1) throw std::invalid_argument("delay tau must be >= 1");
  const int span = (m - 1) * tau;
  if (n <= span)
    throw std::invalid_argument("series too short for embedding: N=" + std::to_string(n) +
                                " <= (m-1)*tau=" + std::to_string(span));
  PointCloud cloud;
  cloud.points.resize(n - span, m);
  for (int t = 0; t < n - span; ++t)
    for (int a = 0; a < m; ++a) cloud.points(t, a) = series(t + a * tau);
  return cloud;
}

namespace {

struct Edge {
  double w;
  int u, v;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if already joined.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Z/2 sum of two sorted index lists.
std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RipsResult rips_persistence(const PointCloud& cloud, std::optional<double> max_scale) {
  const int n = cloud.size();
  if (n < 1) throw std::invalid_argument("rips_persistence needs at least one point");

  Eigen::MatrixXd dist(n, n);
  dist.setZero();
  double max_dist = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // Plain left-to-right accumulation; filtration values must not depend
      // on vectorized reduction order.
      double d2 = 0.0;
      for (int a = 0; a < cloud.dim(); ++a) {
        const double diff = cloud.points(i, a) - cloud.points(j, a);
        d2 += diff * diff;
      }
      const double d = std::sqrt(d2);
      dist(i, j) = d;
      dist(j, i) = d;
      max_dist = std::max(max_dist, d);
    }

  RipsResult result;
  result.max_scale = max_scale ? *max_scale : max_dist;
  const double scale = result.max_scale;

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) <= scale) edges.push_back({dist(i, j), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });
  const int ne = static_cast<int>(edges.size());

  // H0: Kruskal-style sweep; each merging edge kills one component (all
  // births are 0, so any elder-rule tie resolution yields the same diagram).
  result.h0.dimension = 0;
  UnionFind uf(n);
  std::vector<char> edge_is_tree(ne, 0);
  for (int e = 0; e < ne; ++e) {
    if (uf.join(edges[e].u, edges[e].v)) {
      edge_is_tree[e] = 1;
      result.h0.pairs.push_back({0.0, edges[e].w});
    }
  }
  const int components =
      n - static_cast<int>(std::count(edge_is_tree.begin(), edge_is_tree.end(), 1));
  for (int c = 0; c < components; ++c)
    result.h0.pairs.push_back({0.0, std::numeric_limits<double>::infinity()});

  // H1: reduce triangle boundary columns over the edge basis. Edge order is
  // the (value, lex) total order above; triangles are processed by
  // (value, lex), which puts every face before its cofaces.
  result.h1.dimension = 1;
  Eigen::MatrixXi edge_id(n, n);
  edge_id.setConstant(-1);
  for (int e = 0; e < ne; ++e) {
    edge_id(edges[e].u, edges[e].v) = e;
    edge_id(edges[e].v, edges[e].u) = e;
  }

  struct Triangle {
    double w;
    int a, b, c;
  };
  std::vector<Triangle> triangles;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (dist(a, b) > scale) continue;
      for (int c = b + 1; c < n; ++c) {
        if (dist(a, c) > scale || dist(b, c) > scale) continue;
        const double w = std::max({dist(a, b), dist(a, c), dist(b, c)});
        triangles.push_back({w, a, b, c});
      }
    }
  std::sort(triangles.begin(), triangles.end(), [](const Triangle& x, const Triangle& y) {
    return std::tie(x.w, x.a, x.b, x.c) < std::tie(y.w, y.a, y.b, y.c);
  });

  // pivot_column[e] = reduced boundary column whose lowest entry is edge e.
  std::vector<std::vector<int>> pivot_column(ne);
  std::vector<char> edge_paired(ne, 0);
  for (const auto& t : triangles) {
    std::vector<int> col = {edge_id(t.a, t.b), edge_id(t.a, t.c), edge_id(t.b, t.c)};
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      const int low = col.back();
      if (!edge_paired[low]) {
        edge_paired[low] = 1;
        if (t.w > edges[low].w) result.h1.pairs.push_back({edges[low].w, t.w});
        pivot_column[low] = std::move(col);
        break;
      }
      col = sym_diff(col, pivot_column[low]);
    }
    // An emptied column means the triangle creates a 2-cycle; irrelevant
    // below dimension 2.
  }

  // Cycle-creating edges never filled by a triangle are essential H1.
  for (int e = 0; e < ne; ++e)
    if (!edge_is_tree[e] && !edge_paired[e])
      result.h1.pairs.push_back({edges[e].w, std::numeric_limits<double>::infinity()});

  auto by_pair = [](const PersistencePair& x, const PersistencePair& y) {
    return std::tie(x.birth, x.death) < std::tie(y.birth, y.death);
  };
  std::sort(result.h0.pairs.begin(), result.h0.pairs.end(), by_pair);
  std::sort(result.h1.pairs.begin(), result.h1.pairs.end(), by_pair);
  return result;
}

double pssk(const PersistenceDiagram& f, const PersistenceDiagram& g, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("pssk sigma must be positive");
  for (const auto* d : {&f, &g})
    for (const auto& p : d->pairs)
      if (!std::isfinite(p.birth) || !std::isfinite(p.death))
        throw std::invalid_argument("pssk requires finite diagram points; drop or cap first");

  const double inv = 1.0 / (8.0 * sigma);
  double sum = 0.0;
  for (const auto& p : f.pairs)
    for (const auto& q : g.pairs) {
      const double db = p.birth - q.birth;
      const double dd = p.death - q.death;
      const double mb = p.birth - q.death;  // mirrored q = (death, birth)
      const double md = p.death - q.birth;
      sum += std::exp(-(db * db + dd * dd) * inv) - std::exp(-(mb * mb + md * md) * inv);
    }
  return sum / (8.0 * M_PI * sigma);
}

std::vector<PersistenceDiagram> region_diagrams(const SubjectRecord& subject,
                                                const PersistenceParams& p) {
  std::vector<PersistenceDiagram> diagrams;
  diagrams.reserve(subject.regions());
  for (int k = 0; k < subject.regions(); ++k) {
    try {
      const PointCloud cloud = delay_embed(subject.data.row(k).transpose(), p.m, p.tau);
      RipsResult rips = rips_persistence(cloud);
      PersistenceDiagram d = p.essential == EssentialPolicy::Drop
                                 ? rips.h1.drop_infinite()
                                 : rips.h1.cap_infinite(rips.max_scale);
      diagrams.push_back(std::move(d));
    } catch (const std::exception& e) {
      throw std::runtime_error("region " + std::to_string(k) + ": " + e.what());
    }
  }
  return diagrams;
}

SimilarityMatrix persistence_similarity(const SubjectRecord& subject, const PersistenceParams& p) {
  const int k = subject.regions();
  const auto diagrams = region_diagrams(subject, p);

  SimilarityMatrix out;
  out.method = SimilarityMethod::Persistence;
  out.values = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double v = pssk(diagrams[i], diagrams[j], p.sigma);
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  return out;
}

void write_diagrams_csv(const std::filesystem::path& path,
                        const std::vector<PersistenceDiagram>& diagrams) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& d : diagrams)
    for (const auto& p : d.pairs) {
      out << d.dimension << ',' << p.birth << ',';
      if (std::isfinite(p.death))
        out << p.death;
      else
        out << "inf";
      out << '\n';
    }
  io::atomic_write_text(path, out.str());
}

}  // namespace braingk
