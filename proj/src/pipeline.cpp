#include "braingk/pipeline.hpp"

#include "braingk/io.hpp"
#include "braingk/similarity.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

namespace braingk {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& ctx) {
  if (!j.is_object()) throw std::runtime_error("config " + ctx + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw std::runtime_error("config " + ctx + ": unknown key '" + key + "'");
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

std::string format_threshold_tag(const RunConfig& cfg) {
  char buf[32];
  if (cfg.threshold_mode == "density")
    std::snprintf(buf, sizeof(buf), "d%.3f", cfg.density);
  else
    std::snprintf(buf, sizeof(buf), "t%.3f", cfg.threshold);
  return buf;
}

}  // namespace

json RunConfig::to_json() const {
  json j{
      {"method", method},
      {"znormalize", znormalize},
      {"threshold_mode", threshold_mode},
      {"threshold", threshold},
      {"density", density},
      {"tde", {{"m", tde_m}, {"tau", tde_tau}}},
      {"pssk", {{"sigma", pssk_sigma}, {"essential", pssk_essential}}},
      {"rbf", {{"gamma", rbf_gamma ? json(*rbf_gamma) : json(nullptr)}}},
      {"pca", {{"d", pca_d}, {"axis", pca_axis}}},
      {"lasso", {{"lambda", lasso.lambda}, {"tol", lasso.tol}, {"max_iter", lasso.max_iter}}},
      {"wl", {{"h", wl_h}}},
      {"svm", {{"C", svm.C}, {"tol", svm.tol}, {"max_iter", svm.max_iter}}},
      {"sum", {{"components", sum_components}, {"weights", sum_weights}}},
      {"normalize_kernels", normalize_kernels},
      {"kernel", kernel},
      {"seed", seed},
      {"manifest", manifest},
      {"out", out},
      {"jobs", jobs},
  };
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  check_keys(j, {"method", "znormalize", "threshold_mode", "threshold", "density", "tde", "pssk",
                 "rbf", "pca", "lasso", "wl", "svm", "sum", "normalize_kernels", "kernel", "seed",
                 "manifest", "out", "jobs"},
             "top level");
  RunConfig cfg;
  maybe(j, "method", cfg.method);
  maybe(j, "znormalize", cfg.znormalize);
  maybe(j, "threshold_mode", cfg.threshold_mode);
  maybe(j, "threshold", cfg.threshold);
  maybe(j, "density", cfg.density);
  if (j.contains("tde")) {
    check_keys(j["tde"], {"m", "tau"}, "tde");
    maybe(j["tde"], "m", cfg.tde_m);
    maybe(j["tde"], "tau", cfg.tde_tau);
  }
  if (j.contains("pssk")) {
    check_keys(j["pssk"], {"sigma", "essential"}, "pssk");
    maybe(j["pssk"], "sigma", cfg.pssk_sigma);
    maybe(j["pssk"], "essential", cfg.pssk_essential);
  }
  if (j.contains("rbf")) {
    check_keys(j["rbf"], {"gamma"}, "rbf");
    if (j["rbf"].contains("gamma") && !j["rbf"]["gamma"].is_null())
      cfg.rbf_gamma = j["rbf"]["gamma"].get<double>();
  }
  if (j.contains("pca")) {
    check_keys(j["pca"], {"d", "axis"}, "pca");
    maybe(j["pca"], "d", cfg.pca_d);
    maybe(j["pca"], "axis", cfg.pca_axis);
  }
  if (j.contains("lasso")) {
    check_keys(j["lasso"], {"lambda", "tol", "max_iter"}, "lasso");
    maybe(j["lasso"], "lambda", cfg.lasso.lambda);
    maybe(j["lasso"], "tol", cfg.lasso.tol);
    maybe(j["lasso"], "max_iter", cfg.lasso.max_iter);
  }
  if (j.contains("wl")) {
    check_keys(j["wl"], {"h"}, "wl");
    maybe(j["wl"], "h", cfg.wl_h);
  }
  if (j.contains("svm")) {
    check_keys(j["svm"], {"C", "tol", "max_iter"}, "svm");
    maybe(j["svm"], "C", cfg.svm.C);
    maybe(j["svm"], "tol", cfg.svm.tol);
    maybe(j["svm"], "max_iter", cfg.svm.max_iter);
  }
  if (j.contains("sum")) {
    check_keys(j["sum"], {"components", "weights"}, "sum");
    maybe(j["sum"], "components", cfg.sum_components);
    maybe(j["sum"], "weights", cfg.sum_weights);
  }
  maybe(j, "normalize_kernels", cfg.normalize_kernels);
  maybe(j, "kernel", cfg.kernel);
  maybe(j, "seed", cfg.seed);
  maybe(j, "manifest", cfg.manifest);
  maybe(j, "out", cfg.out);
  maybe(j, "jobs", cfg.jobs);
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  const std::set<std::string> methods{"correlation", "rbf", "pca", "l1", "persistence", "sum"};
  if (!methods.count(method)) throw std::invalid_argument("unknown method: " + method);
  if (threshold_mode != "fixed" && threshold_mode != "density")
    throw std::invalid_argument("threshold_mode must be 'fixed' or 'density'");
  if (threshold < 0.0 || threshold > 1.0)
    throw std::invalid_argument("threshold must lie in [0,1]");
  if (threshold_mode == "density" && (density <= 0.0 || density >= 1.0))
    throw std::invalid_argument("density must lie in (0,1)");
  if (tde_m < 1 || tde_tau < 1) throw std::invalid_argument("tde requires m >= 1 and tau >= 1");
  if (!(pssk_sigma > 0.0)) throw std::invalid_argument("pssk sigma must be positive");
  if (pssk_essential != "drop" && pssk_essential != "cap")
    throw std::invalid_argument("pssk essential policy must be 'drop' or 'cap'");
  if (rbf_gamma && !(*rbf_gamma > 0.0)) throw std::invalid_argument("rbf gamma must be positive");
  if (pca_d < 0) throw std::invalid_argument("pca d must be >= 0 (0 = auto)");
  if (pca_axis != "regions" && pca_axis != "time")
    throw std::invalid_argument("pca axis must be 'regions' or 'time'");
  if (lasso.lambda < 0.0 || !(lasso.tol > 0.0) || lasso.max_iter < 1)
    throw std::invalid_argument("invalid lasso config");
  if (wl_h < 0) throw std::invalid_argument("wl h must be >= 0");
  if (!(svm.C > 0.0) || !(svm.tol > 0.0) || svm.max_iter < 1)
    throw std::invalid_argument("invalid svm config");
  if (method == "sum") {
    if (sum_components.empty() || sum_components.size() != sum_weights.size())
      throw std::invalid_argument("sum: components and weights must match and be nonempty");
    double total = 0.0;
    for (double w : sum_weights) {
      if (w < 0.0) throw std::invalid_argument("sum weights must be nonnegative");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("sum weights must sum to 1");
    for (const auto& c : sum_components)
      if (!methods.count(c) || c == "sum")
        throw std::invalid_argument("sum component must be a base method, got: " + c);
    if (!normalize_kernels)
      throw std::invalid_argument("sum kernels require normalize_kernels = true");
  }
  const std::set<std::string> kinds{"all", "wl", "sp", "linear"};
  if (!kinds.count(kernel)) throw std::invalid_argument("kernel must be all|wl|sp|linear");
}

RunConfig load_config_file(const fs::path& path) {
  return RunConfig::from_json(json::parse(io::read_text(path)));
}

namespace {

Eigen::MatrixXd znorm_rows(const Eigen::MatrixXd& data) {
  Eigen::MatrixXd out(data.rows(), data.cols());
  for (int i = 0; i < data.rows(); ++i)
    out.row(i) = znormalize(data.row(i).transpose()).values.transpose();
  return out;
}

int resolve_pca_d(const RunConfig& cfg, const Eigen::MatrixXd& data) {
  if (cfg.pca_d > 0) return cfg.pca_d;
  return std::min<int>(10, std::min(data.rows(), data.cols()));
}

}  // namespace

SimilarityMatrix build_similarity(const SubjectRecord& subject, const RunConfig& cfg) {
  const Eigen::MatrixXd data = cfg.znormalize ? znorm_rows(subject.data) : subject.data;

  SimilarityMatrix raw;
  if (cfg.method == "correlation") {
    raw = pearson_similarity(data);
  } else if (cfg.method == "rbf") {
    raw = rbf_similarity(data, cfg.rbf_gamma);
  } else if (cfg.method == "pca") {
    const int d = resolve_pca_d(cfg, data);
    Eigen::MatrixXd features;
    if (cfg.pca_axis == "regions") {
      features = pca_features(data, d);
    } else {
      // Loadings view: directions of the time-sample cloud live in region
      // space, giving one d-vector per region.
      features = pca_directions(data.transpose(), d);
    }
    raw = rbf_similarity(features, cfg.rbf_gamma);
    raw.method = SimilarityMethod::PcaRbf;
  } else if (cfg.method == "l1") {
    raw = l1_graph(data, cfg.lasso);
  } else if (cfg.method == "persistence") {
    PersistenceParams p;
    p.m = cfg.tde_m;
    p.tau = cfg.tde_tau;
    p.sigma = cfg.pssk_sigma;
    p.essential = cfg.pssk_essential == "cap" ? EssentialPolicy::Cap : EssentialPolicy::Drop;
    SubjectRecord z = subject;
    z.data = data;
    raw = persistence_similarity(z, p);
  } else {
    throw std::invalid_argument("build_similarity: not a per-subject method: " + cfg.method);
  }
  return normalize_unit_interval(std::move(raw));
}

std::string graph_stage_hash(const RunConfig& cfg) {
  json j{{"stage", "graph-v1"}, {"method", cfg.method}, {"znormalize", cfg.znormalize}};
  if (cfg.method == "rbf" || cfg.method == "pca")
    j["gamma"] = cfg.rbf_gamma ? json(*cfg.rbf_gamma) : json(nullptr);
  if (cfg.method == "pca") {
    j["pca_d"] = cfg.pca_d;
    j["pca_axis"] = cfg.pca_axis;
  }
  if (cfg.method == "l1")
    j["lasso"] = {{"lambda", cfg.lasso.lambda}, {"tol", cfg.lasso.tol},
                  {"max_iter", cfg.lasso.max_iter}};
  if (cfg.method == "persistence")
    j["pssk"] = {{"m", cfg.tde_m}, {"tau", cfg.tde_tau}, {"sigma", cfg.pssk_sigma},
                 {"essential", cfg.pssk_essential}};
  return io::hash_hex(io::fnv1a64(j.dump()));
}

std::string kernel_stage_hash(const RunConfig& cfg, const Cohort& cohort) {
  json j{{"stage", "kernel-v1"},
         {"graph", graph_stage_hash(cfg)},
         {"threshold_mode", cfg.threshold_mode},
         {"wl_h", cfg.wl_h}};
  if (cfg.threshold_mode == "fixed")
    j["threshold"] = cfg.threshold;
  else
    j["density"] = cfg.density;
  std::uint64_t h = io::fnv1a64(j.dump());
  for (const auto& s : cohort.subjects) {
    h = io::fnv1a64(s.id, h);
    h = io::fnv1a64(s.data, h);
  }
  return io::hash_hex(h);
}

namespace {

fs::path graphs_dir(const RunConfig& cfg) { return fs::path(cfg.out) / "graphs" / cfg.method; }
fs::path kernels_dir(const RunConfig& cfg) { return fs::path(cfg.out) / "kernels"; }
fs::path reports_dir(const RunConfig& cfg) { return fs::path(cfg.out) / "reports"; }

json similarity_meta(const SubjectRecord& subject, const SimilarityMatrix& m,
                     const RunConfig& cfg) {
  return json{{"subject_id", subject.id},
              {"method", to_string(m.method)},
              {"normalized", m.normalized},
              {"degenerate_rows", m.degenerate_rows},
              {"config_hash", graph_stage_hash(cfg)},
              {"data_hash", io::hash_hex(io::fnv1a64(subject.data))}};
}

}  // namespace

GraphArtifacts ensure_graphs(const RunConfig& cfg) {
  if (cfg.manifest.empty()) throw std::invalid_argument("no manifest configured");
  GraphArtifacts result;
  result.cohort = load_manifest(cfg.manifest);
  const int l = result.cohort.size();
  result.graphs.resize(l);

  const fs::path dir = graphs_dir(cfg);
  const std::string want_hash = graph_stage_hash(cfg);
  std::vector<char> was_cached(l, 0);

  detail::parallel_for(l, cfg.jobs, [&](int i) {
    const SubjectRecord& subject = result.cohort.subjects[i];
    const fs::path csv_path = dir / (subject.id + ".csv");
    const fs::path meta_path = dir / (subject.id + ".json");
    if (fs::exists(csv_path) && fs::exists(meta_path)) {
      try {
        const json meta = json::parse(io::read_text(meta_path));
        if (meta.at("config_hash") == want_hash &&
            meta.at("data_hash") == io::hash_hex(io::fnv1a64(subject.data))) {
          SimilarityMatrix m;
          m.values = io::read_matrix_csv(csv_path);
          m.method = similarity_method_from_string(meta.at("method").get<std::string>());
          m.normalized = meta.at("normalized").get<bool>();
          m.degenerate_rows = meta.at("degenerate_rows").get<std::vector<int>>();
          result.graphs[i] = std::move(m);
          was_cached[i] = 1;
          return;
        }
      } catch (const std::exception&) {
        // fall through and rebuild
      }
    }
    try {
      result.graphs[i] = build_similarity(subject, cfg);
    } catch (const std::exception& e) {
      throw std::runtime_error("subject " + subject.id + ": " + e.what());
    }
    io::write_matrix_csv(csv_path, result.graphs[i].values);
    io::atomic_write_text(meta_path, similarity_meta(subject, result.graphs[i], cfg).dump(2) + "\n");
    if (cfg.dump_diagrams && cfg.method == "persistence") {
      PersistenceParams p;
      p.m = cfg.tde_m;
      p.tau = cfg.tde_tau;
      p.sigma = cfg.pssk_sigma;
      p.essential = cfg.pssk_essential == "cap" ? EssentialPolicy::Cap : EssentialPolicy::Drop;
      SubjectRecord z = subject;
      if (cfg.znormalize) z.data = znorm_rows(subject.data);
      write_diagrams_csv(fs::path(cfg.out) / "diagrams" / (subject.id + ".csv"),
                         region_diagrams(z, p));
    }
  });

  for (int i = 0; i < l; ++i)
    was_cached[i] ? ++result.skipped : ++result.built;
  return result;
}

KernelSet compute_kernels(const GraphArtifacts& artifacts, const RunConfig& cfg) {
  const int l = artifacts.cohort.size();
  KernelSet set;
  set.chosen_thresholds.resize(l, cfg.threshold);

  std::vector<Eigen::VectorXd> features;
  features.reserve(l);
  std::vector<LabeledGraph> graphs;
  graphs.reserve(l);
  for (int i = 0; i < l; ++i) {
    const SimilarityMatrix& m = artifacts.graphs[i];
    features.push_back(vectorize_upper(m));
    if (cfg.threshold_mode == "density") {
      double chosen = 0.0;
      graphs.push_back(binarize_density(m, cfg.density, &chosen));
      set.chosen_thresholds[i] = chosen;
    } else {
      graphs.push_back(binarize(m, cfg.threshold));
    }
  }
  set.linear = linear_kernel(features);
  set.wl = wl_kernel(graphs, cfg.wl_h, &set.wl_table);
  set.sp = sp_kernel(graphs);
  return set;
}

void cmd_synth(std::uint64_t seed, int L, int K, int N, const fs::path& out) {
  const Cohort cohort = generate_synthetic_cohort(seed, L, K, N);
  fs::create_directories(out / "subjects");
  std::ostringstream manifest;
  manifest << "subject_id,site,ados,path\n";
  for (const auto& s : cohort.subjects) {
    const std::string rel = "subjects/" + s.id + ".csv";
    io::write_matrix_csv(out / rel, s.data);
    manifest << s.id << ',' << s.site << ',' << s.ados << ',' << rel << '\n';
  }
  io::atomic_write_text(out / "manifest.csv", manifest.str());
  std::cerr << "wrote " << cohort.size() << " subjects and manifest to " << out.string() << "\n";
}

void cmd_build_graphs(const RunConfig& cfg) {
  if (cfg.method == "sum")
    throw std::invalid_argument("build-graphs needs a base method, not 'sum'");
  const GraphArtifacts artifacts = ensure_graphs(cfg);
  if (artifacts.skipped > 0)
    std::cerr << "skipped " << artifacts.skipped << " subjects (cached)\n";
  std::cerr << "built " << artifacts.built << " similarity matrices (" << cfg.method << ") in "
            << graphs_dir(cfg).string() << "\n";
}

namespace {

fs::path kernel_csv_path(const RunConfig& cfg, const std::string& method,
                         const std::string& kind) {
  return kernels_dir(cfg) / (method + "_" + kind + ".csv");
}

void write_kernel_artifact(const RunConfig& cfg, const Cohort& cohort, const KernelMatrix& k,
                           const std::string& kind) {
  const fs::path csv = kernel_csv_path(cfg, cfg.method, kind);
  io::write_matrix_csv(csv, k.values);
  std::vector<std::string> ids;
  ids.reserve(cohort.size());
  for (const auto& s : cohort.subjects) ids.push_back(s.id);
  json meta{{"method", cfg.method},
            {"kind", kind},
            {"normalized", k.normalized},
            {"wl_h", cfg.wl_h},
            {"threshold_mode", cfg.threshold_mode},
            {"threshold", cfg.threshold},
            {"density", cfg.density},
            {"config_hash", kernel_stage_hash(cfg, cohort)},
            {"subjects", ids}};
  io::atomic_write_text(csv.parent_path() / (cfg.method + "_" + kind + ".json"),
                        meta.dump(2) + "\n");
}

KernelMatrix load_kernel_artifact(const RunConfig& cfg, const std::string& method,
                                  const std::string& kind, const Cohort& cohort,
                                  std::vector<std::string>* missing) {
  const fs::path csv = kernel_csv_path(cfg, method, kind);
  const fs::path meta_path = kernels_dir(cfg) / (method + "_" + kind + ".json");
  if (!fs::exists(csv) || !fs::exists(meta_path)) {
    if (missing) {
      missing->push_back(csv.string());
      return {};
    }
    throw std::runtime_error("missing kernel artifact: " + csv.string());
  }
  RunConfig component = cfg;
  component.method = method;
  const json meta = json::parse(io::read_text(meta_path));
  const std::string expected = kernel_stage_hash(component, cohort);
  if (meta.at("config_hash") != expected)
    throw std::runtime_error("kernel artifact " + csv.string() +
                             " was built under a different configuration (hash " +
                             meta.at("config_hash").get<std::string>() + ", expected " + expected +
                             "); re-run compute-kernel");
  KernelMatrix k;
  k.values = io::read_matrix_csv(csv);
  k.kind = meta.at("kind").get<std::string>();
  k.normalized = meta.at("normalized").get<bool>();
  return k;
}

}  // namespace

void cmd_compute_kernel(const RunConfig& cfg) {
  if (cfg.method == "sum")
    throw std::invalid_argument("compute-kernel computes base kernels; run it per component");
  const GraphArtifacts artifacts = ensure_graphs(cfg);
  const KernelSet set = compute_kernels(artifacts, cfg);
  if (cfg.kernel == "all" || cfg.kernel == "linear")
    write_kernel_artifact(cfg, artifacts.cohort, set.linear, "linear");
  if (cfg.kernel == "all" || cfg.kernel == "wl") {
    write_kernel_artifact(cfg, artifacts.cohort, set.wl, "wl");
    set.wl_table.save(kernels_dir(cfg) / (cfg.method + "_wl_table.json"));
  }
  if (cfg.kernel == "all" || cfg.kernel == "sp")
    write_kernel_artifact(cfg, artifacts.cohort, set.sp, "sp");
  std::cerr << "kernel matrices (" << cfg.method << ") written to " << kernels_dir(cfg).string()
            << "\n";
}

fs::path evaluate_report_path(const RunConfig& cfg) {
  return reports_dir(cfg) / ("eval_" + cfg.method + "_" + format_threshold_tag(cfg) + ".json");
}

namespace {

std::vector<SeverityClass> cohort_labels(const Cohort& cohort) {
  std::vector<SeverityClass> labels;
  labels.reserve(cohort.size());
  for (const auto& s : cohort.subjects) labels.push_back(bin_ados(s.ados));
  return labels;
}

json loo_section(const KernelMatrix& kernel, const std::vector<SeverityClass>& labels,
                 const RunConfig& cfg, const std::vector<std::string>& ids) {
  KernelMatrix k = cfg.normalize_kernels ? normalize_kernel(kernel) : kernel;
  EvalReport report = loo_evaluate(k, labels, cfg.svm, ids);
  json section = report.to_json();
  section.erase("config");  // the run config is embedded once, at top level
  section["kind"] = kernel.kind;
  return section;
}

}  // namespace

json cmd_evaluate(const RunConfig& cfg) {
  if (cfg.manifest.empty()) throw std::invalid_argument("no manifest configured");

  Cohort cohort;
  KernelMatrix linear, wl, sp;
  if (cfg.method == "sum") {
    cohort = load_manifest(cfg.manifest);
    std::vector<std::string> missing;
    std::vector<KernelMatrix> linears, wls, sps;
    for (const auto& component : cfg.sum_components) {
      linears.push_back(load_kernel_artifact(cfg, component, "linear", cohort, &missing));
      wls.push_back(load_kernel_artifact(cfg, component, "wl", cohort, &missing));
      sps.push_back(load_kernel_artifact(cfg, component, "sp", cohort, &missing));
    }
    if (!missing.empty()) {
      std::string msg = "sum kernel references unbuilt artifacts; run compute-kernel first:";
      for (const auto& m : missing) msg += "\n  " + m;
      throw std::runtime_error(msg);
    }
    auto normalize_all = [](std::vector<KernelMatrix> ks) {
      for (auto& k : ks) k = normalize_kernel(k);
      return ks;
    };
    linear = sum_kernel(normalize_all(linears), cfg.sum_weights);
    wl = sum_kernel(normalize_all(wls), cfg.sum_weights);
    sp = sum_kernel(normalize_all(sps), cfg.sum_weights);
    linear.kind = "linear";
    wl.kind = "wl";
    sp.kind = "sp";
  } else {
    GraphArtifacts artifacts = ensure_graphs(cfg);
    KernelSet set = compute_kernels(artifacts, cfg);
    cohort = std::move(artifacts.cohort);
    linear = std::move(set.linear);
    wl = std::move(set.wl);
    sp = std::move(set.sp);
  }

  const std::vector<SeverityClass> labels = cohort_labels(cohort);
  std::vector<std::string> ids;
  ids.reserve(cohort.size());
  for (const auto& s : cohort.subjects) ids.push_back(s.id);

  json traditional = loo_section(linear, labels, cfg, ids);
  json graph_wl = loo_section(wl, labels, cfg, ids);
  json graph_sp = loo_section(sp, labels, cfg, ids);

  const double wl_acc = graph_wl.at("accuracy").get<double>();
  const double sp_acc = graph_sp.at("accuracy").get<double>();
  const std::string best = wl_acc >= sp_acc ? "wl" : "sp";

  json report{{"feature", cfg.method},
              {"config", cfg.to_json()},
              {"config_hash", kernel_stage_hash(cfg, cohort)},
              {"subjects", cohort.size()},
              {"traditional", {{"kind", "linear"}, {"accuracy", traditional.at("accuracy")},
                               {"report", traditional}}},
              {"graph",
               {{"wl", graph_wl},
                {"sp", graph_sp},
                {"best", best},
                {"accuracy", std::max(wl_acc, sp_acc)}}}};

  io::atomic_write_text(evaluate_report_path(cfg), report.dump(2) + "\n");
  return report;
}

std::string render_report_table(const std::vector<json>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-16s %-12s %-20s %-12s\n", "Feature", "Traditional",
                "Graph Kernel (best)", "WL / SP");
  out << line;
  out << std::string(62, '-') << "\n";
  for (const auto& r : reports) {
    const auto& g = r.at("graph");
    std::snprintf(line, sizeof(line), "%-16s %-12.2f %-7.2f (%s)%9s %.2f / %.2f\n",
                  r.at("feature").get<std::string>().c_str(),
                  r.at("traditional").at("accuracy").get<double>(),
                  g.at("accuracy").get<double>(), g.at("best").get<std::string>().c_str(), "",
                  g.at("wl").at("accuracy").get<double>(), g.at("sp").at("accuracy").get<double>());
    out << line;
  }
  return out.str();
}

}  // namespace braingk
