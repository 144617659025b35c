#include "braingk/pipeline.hpp"

#include "braingk/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace braingk;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("braingk_pipe_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig synth_config(const fs::path& dir, const std::string& method) {
  RunConfig cfg;
  cfg.method = method;
  cfg.manifest = (dir / "manifest.csv").string();
  cfg.out = dir.string();
  cfg.jobs = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config json round-trip and unknown-key rejection") {
  RunConfig cfg;
  cfg.method = "l1";
  cfg.lasso.lambda = 0.25;
  cfg.wl_h = 2;
  cfg.rbf_gamma = 0.4;
  const auto j = cfg.to_json();
  const auto back = RunConfig::from_json(j);
  CHECK(back.method == "l1");
  CHECK(back.lasso.lambda == 0.25);
  CHECK(back.wl_h == 2);
  CHECK(back.rbf_gamma.has_value());
  CHECK(back.to_json() == j);

  auto bad = j;
  bad["metod"] = "typo";
  CHECK_THROWS_WITH_AS(RunConfig::from_json(bad), doctest::Contains("unknown key"),
                       std::runtime_error);
  auto bad_nested = j;
  bad_nested["wl"]["depth"] = 3;
  CHECK_THROWS_WITH_AS(RunConfig::from_json(bad_nested), doctest::Contains("unknown key"),
                       std::runtime_error);
}

TEST_CASE("config validation rejects out-of-range values") {
  RunConfig cfg;
  cfg.threshold = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.method = "bogus";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.pssk_sigma = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.method = "sum";
  cfg.sum_weights = {0.9, 0.9};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.method = "sum";
  cfg.normalize_kernels = false;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("synth writes a loadable cohort deterministically") {
  const fs::path dir = fresh_dir("synth");
  cmd_synth(7, 6, 6, 30, dir);
  const Cohort cohort = load_manifest(dir / "manifest.csv");
  CHECK(cohort.size() == 6);
  CHECK(cohort.regions() == 6);

  const std::string first = io::read_text(dir / "subjects" / "sub000.csv");
  cmd_synth(7, 6, 6, 30, dir);
  CHECK(io::read_text(dir / "subjects" / "sub000.csv") == first);

  CHECK_THROWS_AS(cmd_synth(7, 2, 6, 30, dir), std::invalid_argument);
}

TEST_CASE("build-graphs writes artifacts and caches on rerun") {
  const fs::path dir = fresh_dir("graphs");
  cmd_synth(3, 6, 6, 40, dir);
  RunConfig cfg = synth_config(dir, "correlation");

  auto first = ensure_graphs(cfg);
  CHECK(first.built == 6);
  CHECK(first.skipped == 0);
  CHECK(fs::exists(dir / "graphs" / "correlation" / "sub000.csv"));
  CHECK(fs::exists(dir / "graphs" / "correlation" / "sub000.json"));

  auto second = ensure_graphs(cfg);
  CHECK(second.built == 0);
  CHECK(second.skipped == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(second.graphs[i].values == first.graphs[i].values);

  SUBCASE("a config change invalidates the cache") {
    cfg.znormalize = false;
    auto third = ensure_graphs(cfg);
    CHECK(third.built == 6);
  }
  SUBCASE("graph meta records the config hash") {
    const auto meta =
        nlohmann::json::parse(io::read_text(dir / "graphs" / "correlation" / "sub000.json"));
    CHECK(meta.at("config_hash").get<std::string>() == graph_stage_hash(cfg));
    CHECK(meta.at("normalized").get<bool>());
  }
}

TEST_CASE("evaluate produces both kernel paths and a stable report") {
  const fs::path dir = fresh_dir("eval");
  cmd_synth(11, 9, 8, 60, dir);
  RunConfig cfg = synth_config(dir, "correlation");

  const auto report = cmd_evaluate(cfg);
  CHECK(report.at("feature") == "correlation");
  CHECK(report.at("traditional").contains("accuracy"));
  CHECK(report.at("graph").at("wl").contains("accuracy"));
  CHECK(report.at("graph").at("sp").contains("accuracy"));
  const std::string best = report.at("graph").at("best");
  CHECK((best == "wl" || best == "sp"));
  CHECK(fs::exists(evaluate_report_path(cfg)));

  // Determinism at the byte level.
  const std::string bytes = io::read_text(evaluate_report_path(cfg));
  fs::remove_all(dir / "graphs");
  fs::remove_all(dir / "reports");
  cmd_evaluate(cfg);
  CHECK(io::read_text(evaluate_report_path(cfg)) == bytes);

  // The rendered table carries both columns.
  const auto table = render_report_table({report});
  CHECK(table.find("correlation") != std::string::npos);
  CHECK(table.find("Traditional") != std::string::npos);
}

TEST_CASE("persistence precondition errors carry subject and region") {
  const fs::path dir = fresh_dir("short");
  cmd_synth(2, 4, 5, 20, dir);
  RunConfig cfg = synth_config(dir, "persistence");
  cfg.tde_m = 8;
  cfg.tde_tau = 3;  // span 21 > N=20
  try {
    ensure_graphs(cfg);
    FAIL("expected embedding failure");
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    CHECK(what.find("sub00") != std::string::npos);
    CHECK(what.find("region 0") != std::string::npos);
  }
}

TEST_CASE("sum evaluation requires prebuilt component kernels") {
  const fs::path dir = fresh_dir("sum");
  cmd_synth(5, 6, 6, 40, dir);
  RunConfig cfg = synth_config(dir, "sum");
  cfg.sum_components = {"correlation", "rbf"};
  cfg.sum_weights = {0.5, 0.5};

  try {
    cmd_evaluate(cfg);
    FAIL("expected missing artifacts");
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    CHECK(what.find("unbuilt") != std::string::npos);
    CHECK(what.find("correlation_linear.csv") != std::string::npos);
    CHECK(what.find("rbf_wl.csv") != std::string::npos);
  }

  // Build the components, then the sum evaluates.
  RunConfig corr = synth_config(dir, "correlation");
  RunConfig rbf = synth_config(dir, "rbf");
  cmd_compute_kernel(corr);
  cmd_compute_kernel(rbf);
  const auto report = cmd_evaluate(cfg);
  CHECK(report.at("feature") == "sum");
  CHECK(report.at("traditional").contains("accuracy"));

  SUBCASE("artifacts from a different config are rejected") {
    RunConfig stale = cfg;
    stale.wl_h = 5;  // kernel-stage parameter changed after compute-kernel
    CHECK_THROWS_WITH_AS(cmd_evaluate(stale), doctest::Contains("different configuration"),
                         std::runtime_error);
  }
}

TEST_CASE("kernel artifacts carry hashes; evaluate honors threshold sweep naming") {
  const fs::path dir = fresh_dir("kern");
  cmd_synth(13, 6, 6, 40, dir);
  RunConfig cfg = synth_config(dir, "correlation");
  cmd_compute_kernel(cfg);
  CHECK(fs::exists(dir / "kernels" / "correlation_wl.csv"));
  CHECK(fs::exists(dir / "kernels" / "correlation_sp.json"));
  CHECK(fs::exists(dir / "kernels" / "correlation_linear.csv"));
  CHECK(fs::exists(dir / "kernels" / "correlation_wl_table.json"));

  const auto meta = nlohmann::json::parse(io::read_text(dir / "kernels" / "correlation_wl.json"));
  const Cohort cohort = load_manifest(cfg.manifest);
  CHECK(meta.at("config_hash").get<std::string>() == kernel_stage_hash(cfg, cohort));

  cfg.threshold = 0.4;
  const auto path = evaluate_report_path(cfg);
  CHECK(path.filename().string() == "eval_correlation_t0.400.json");
}
