#pragma once

#include "braingk/types.hpp"

#include <cstdint>
#include <filesystem>

namespace braingk {

// ADOS bins: mild 0-8, moderate 9-13, severe 14 and above.
SeverityClass bin_ados(int score);

struct ZNormalized {
  Eigen::VectorXd values;
  bool degenerate = false;  // constant input, returned as all zeros
};

// Zero mean, unit population (1/N) standard deviation.
ZNormalized znormalize(const Eigen::VectorXd& series);

// Manifest CSV with header `subject_id,site,ados,path`; relative matrix
// paths are resolved against the manifest's directory.
Cohort load_manifest(const std::filesystem::path& manifest_path);

// Deterministic cohort with class-dependent block connectivity. Subject l
// belongs to class l mod 3; class c partitions the K regions into 2+c
// contiguous blocks whose members share a latent signal.
Cohort generate_synthetic_cohort(std::uint64_t seed, int L, int K, int N);

// Block id of region k for a synthetic subject of class c (test hook for
// verifying the planted structure).
int synthetic_block_of(int region, int K, int cls);

}  // namespace braingk
