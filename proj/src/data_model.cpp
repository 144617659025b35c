#include "braingk/data_model.hpp"

#include "braingk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace braingk {

namespace fs = std::filesystem;

SeverityClass severity_from_string(const std::string& s) {
  if (s == "mild") return SeverityClass::Mild;
  if (s == "moderate") return SeverityClass::Moderate;
  if (s == "severe") return SeverityClass::Severe;
  throw std::invalid_argument("unknown severity class: " + s);
}

SeverityClass bin_ados(int score) {
  if (score < 0) throw std::invalid_argument("ADOS score must be nonnegative, got " + std::to_string(score));
  if (score <= 8) return SeverityClass::Mild;
  if (score <= 13) return SeverityClass::Moderate;
  return SeverityClass::Severe;
}

ZNormalized znormalize(const Eigen::VectorXd& series) {
  const int n = static_cast<int>(series.size());
  if (n < 2) throw std::invalid_argument("znormalize needs at least 2 samples");
  const double mean = series.mean();
  const double var = (series.array() - mean).square().sum() / n;
  ZNormalized out;
  if (var <= 0.0) {
    out.values = Eigen::VectorXd::Zero(n);
    out.degenerate = true;
    return out;
  }
  out.values = (series.array() - mean) / std::sqrt(var);
  return out;
}

namespace {

int parse_ados_field(const std::string& token, int row) {
  int v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::runtime_error("manifest row " + std::to_string(row) +
                             ": ADOS score is not an integer: '" + token + "'");
  return v;
}

}  // namespace

Cohort load_manifest(const fs::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path.string());
  const fs::path base = manifest_path.has_parent_path() ? manifest_path.parent_path() : fs::path(".");

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty cohort: " + manifest_path.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = io::split_csv_line(line);
  const std::vector<std::string> expected{"subject_id", "site", "ados", "path"};
  if (std::vector<std::string>(header.begin(), header.end()) != expected)
    throw std::runtime_error("manifest header must be 'subject_id,site,ados,path': " +
                             manifest_path.string());

  Cohort cohort;
  std::set<std::string> seen_ids;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = io::split_csv_line(line);
    if (fields.size() != 4)
      throw std::runtime_error("manifest row " + std::to_string(row) + ": expected 4 fields, got " +
                               std::to_string(fields.size()));

    SubjectRecord rec;
    rec.id = fields[0];
    rec.site = fields[1];
    rec.ados = parse_ados_field(fields[2], row);
    if (rec.ados < 0)
      throw std::runtime_error("manifest row " + std::to_string(row) + ": negative ADOS score");
    if (!seen_ids.insert(rec.id).second)
      throw std::runtime_error("duplicate subject id in manifest: " + rec.id);

    fs::path data_path(fields[3]);
    if (data_path.is_relative()) data_path = base / data_path;
    rec.data = io::read_matrix_csv(data_path);
    if (rec.regions() < 2 || rec.samples() < 2)
      throw std::runtime_error("subject " + rec.id + ": matrix must be at least 2x2, got " +
                               std::to_string(rec.regions()) + "x" + std::to_string(rec.samples()));
    if (!cohort.subjects.empty() && rec.regions() != cohort.regions())
      throw std::runtime_error("region count mismatch: subject " + cohort.subjects.front().id +
                               " has " + std::to_string(cohort.regions()) + " regions, subject " +
                               rec.id + " has " + std::to_string(rec.regions()));
    cohort.subjects.push_back(std::move(rec));
  }
  if (cohort.subjects.empty()) throw std::runtime_error("empty cohort: " + manifest_path.string());
  return cohort;
}

int synthetic_block_of(int region, int K, int cls) {
  const int nblocks = 2 + cls;
  return static_cast<int>(static_cast<long long>(region) * nblocks / K);
}

Cohort generate_synthetic_cohort(std::uint64_t seed, int L, int K, int N) {
  if (L < 3) throw std::invalid_argument("synthetic cohort needs L >= 3");
  if (K < 4) throw std::invalid_argument("synthetic cohort needs K >= 4");
  if (N < 20) throw std::invalid_argument("synthetic cohort needs N >= 20");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> mild_score(0, 8);
  std::uniform_int_distribution<int> moderate_score(9, 13);
  std::uniform_int_distribution<int> severe_score(14, 22);

  // Shared latent signal fraction: within-block correlation ~ 0.81.
  const double signal = 0.9;
  const double noise = std::sqrt(1.0 - signal * signal);

  Cohort cohort;
  cohort.subjects.reserve(L);
  for (int l = 0; l < L; ++l) {
    const int cls = l % 3;
    const int nblocks = 2 + cls;

    Eigen::MatrixXd latents(nblocks, N);
    for (int b = 0; b < nblocks; ++b)
      for (int t = 0; t < N; ++t) latents(b, t) = gauss(rng);

    SubjectRecord rec;
    rec.data.resize(K, N);
    for (int k = 0; k < K; ++k) {
      const int b = synthetic_block_of(k, K, cls);
      for (int t = 0; t < N; ++t) rec.data(k, t) = signal * latents(b, t) + noise * gauss(rng);
    }

    char idbuf[16];
    std::snprintf(idbuf, sizeof(idbuf), "sub%03d", l);
    rec.id = idbuf;
    rec.site = "SYNTH";
    switch (cls) {
      case 0: rec.ados = mild_score(rng); break;
      case 1: rec.ados = moderate_score(rng); break;
      default: rec.ados = severe_score(rng); break;
    }
    cohort.subjects.push_back(std::move(rec));
  }
  return cohort;
}

}  // namespace braingk
