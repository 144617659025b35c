#include "braingk/io.hpp"
#include "braingk/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using braingk::RunConfig;

// CLI flags override config-file values; only flags the user actually set
// are applied.
struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> manifest, out, method, threshold_mode, pca_axis, essential, kernel;
  std::optional<double> threshold, density, sigma, lambda, gamma, svm_c;
  std::optional<int> wl_h, tde_m, tde_tau, pca_d, jobs;
  std::optional<std::uint64_t> seed;
  std::optional<bool> no_znormalize, raw_kernels;
  std::optional<std::vector<std::string>> sum_components;
  std::optional<std::vector<double>> sum_weights;
  bool dump_diagrams = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "JSON config file");
    cmd.add_option("--manifest", manifest, "cohort manifest CSV");
    cmd.add_option("--out", out, "output directory");
    cmd.add_option("--method", method, "correlation|rbf|pca|l1|persistence|sum");
    cmd.add_option("--threshold", threshold, "binarization threshold in [0,1]");
    cmd.add_option("--threshold-mode", threshold_mode, "fixed|density");
    cmd.add_option("--density", density, "edge density target in (0,1)");
    cmd.add_option("--sigma", sigma, "persistence scale-space kernel bandwidth");
    cmd.add_option("--essential", essential, "essential bar policy: drop|cap");
    cmd.add_option("--lambda", lambda, "l1 graph sparsity weight");
    cmd.add_option("--gamma", gamma, "RBF bandwidth (default: median heuristic)");
    cmd.add_option("--m", tde_m, "delay embedding dimension");
    cmd.add_option("--tau", tde_tau, "delay embedding lag");
    cmd.add_option("--pca-d", pca_d, "PCA component count (0 = auto)");
    cmd.add_option("--pca-axis", pca_axis, "regions|time");
    cmd.add_option("--wl-h", wl_h, "Weisfeiler-Lehman iteration depth");
    cmd.add_option("--svm-c", svm_c, "SVM box constraint");
    cmd.add_option("--kernel", kernel, "which kernel artifacts to emit: all|wl|sp|linear");
    cmd.add_option("--sum-components", sum_components, "base methods combined by method=sum")
        ->delimiter(',');
    cmd.add_option("--sum-weights", sum_weights, "convex weights for method=sum")->delimiter(',');
    cmd.add_option("--seed", seed, "RNG seed");
    cmd.add_option("--jobs", jobs, "worker threads (0 = hardware)");
    cmd.add_flag("--no-znormalize", [this](std::int64_t) { no_znormalize = true; },
                 "skip per-series z-normalization");
    cmd.add_flag("--raw-kernels", [this](std::int64_t) { raw_kernels = true; },
                 "skip kernel normalization before the SVM");
  }

  RunConfig resolve() const {
    RunConfig cfg = config_path ? braingk::load_config_file(*config_path) : RunConfig{};
    if (manifest) cfg.manifest = *manifest;
    if (out) cfg.out = *out;
    if (method) cfg.method = *method;
    if (threshold) cfg.threshold = *threshold;
    if (threshold_mode) cfg.threshold_mode = *threshold_mode;
    if (density) cfg.density = *density;
    if (sigma) cfg.pssk_sigma = *sigma;
    if (essential) cfg.pssk_essential = *essential;
    if (lambda) cfg.lasso.lambda = *lambda;
    if (gamma) cfg.rbf_gamma = *gamma;
    if (tde_m) cfg.tde_m = *tde_m;
    if (tde_tau) cfg.tde_tau = *tde_tau;
    if (pca_d) cfg.pca_d = *pca_d;
    if (pca_axis) cfg.pca_axis = *pca_axis;
    if (wl_h) cfg.wl_h = *wl_h;
    if (svm_c) cfg.svm.C = *svm_c;
    if (kernel) cfg.kernel = *kernel;
    if (sum_components) cfg.sum_components = *sum_components;
    if (sum_weights) cfg.sum_weights = *sum_weights;
    if (seed) cfg.seed = *seed;
    if (jobs) cfg.jobs = *jobs;
    if (no_znormalize) cfg.znormalize = false;
    if (raw_kernels) cfg.normalize_kernels = false;
    cfg.dump_diagrams = dump_diagrams;
    cfg.validate();
    return cfg;
  }
};

std::vector<double> parse_sweep(const std::string& spec) {
  double a = 0, b = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0 || b < a)
    throw std::invalid_argument("--sweep-threshold expects a:b:step with step > 0, got " + spec);
  std::vector<double> values;
  for (double t = a; t <= b + 1e-12; t += step) values.push_back(std::min(t, 1.0));
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-series similarity graphs, graph kernels and LOO severity classification"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic cohort + manifest");
  std::uint64_t synth_seed = 1;
  int synth_l = 30, synth_k = 12, synth_n = 200;
  std::string synth_out = "out";
  synth->add_option("--seed", synth_seed, "RNG seed");
  synth->add_option("--subjects", synth_l, "cohort size L");
  synth->add_option("--regions", synth_k, "region count K");
  synth->add_option("--samples", synth_n, "time samples N");
  synth->add_option("--out", synth_out, "output directory");

  auto* build = app.add_subcommand("build-graphs", "build per-subject similarity matrices");
  Overrides build_opts;
  build_opts.add_to(*build);
  build->add_flag("--dump-diagrams", build_opts.dump_diagrams,
                  "also write persistence diagrams (method=persistence)");

  auto* kern = app.add_subcommand("compute-kernel", "compute subject-by-subject kernel matrices");
  Overrides kern_opts;
  kern_opts.add_to(*kern);

  auto* eval = app.add_subcommand("evaluate", "leave-one-out evaluation, both kernel paths");
  Overrides eval_opts;
  eval_opts.add_to(*eval);
  std::string sweep_spec;
  eval->add_option("--sweep-threshold", sweep_spec, "a:b:step threshold sweep");

  auto* rep = app.add_subcommand("report", "print evaluate reports as a table");
  std::vector<std::string> report_files;
  rep->add_option("files", report_files, "evaluate report JSON files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      braingk::cmd_synth(synth_seed, synth_l, synth_k, synth_n, synth_out);
    } else if (build->parsed()) {
      braingk::cmd_build_graphs(build_opts.resolve());
    } else if (kern->parsed()) {
      braingk::cmd_compute_kernel(kern_opts.resolve());
    } else if (eval->parsed()) {
      braingk::RunConfig cfg = eval_opts.resolve();
      if (!sweep_spec.empty()) {
        for (double t : parse_sweep(sweep_spec)) {
          cfg.threshold = t;
          cfg.threshold_mode = "fixed";
          const auto report = braingk::cmd_evaluate(cfg);
          std::cerr << "threshold " << t << ": report written to "
                    << braingk::evaluate_report_path(cfg).string() << "\n";
        }
      } else {
        const auto report = braingk::cmd_evaluate(cfg);
        std::cout << braingk::render_report_table({report});
        std::cerr << "report written to " << braingk::evaluate_report_path(cfg).string() << "\n";
      }
    } else if (rep->parsed()) {
      std::vector<nlohmann::json> reports;
      for (const auto& f : report_files)
        reports.push_back(nlohmann::json::parse(braingk::io::read_text(f)));
      std::cout << braingk::render_report_table(reports);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
