#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace braingk::io {

// Headerless CSV of reals, one matrix row per line.
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

// Writes with max_digits10 precision so a read-back is bit-exact.
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m);

// Write-temp-then-rename; partial writes never clobber a finished artifact.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

std::vector<std::string> split_csv_line(const std::string& line);

double parse_double(const std::string& token, const std::string& context);

// FNV-1a, used for artifact/config fingerprints.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 1469598103934665603ULL);
std::uint64_t fnv1a64(const Eigen::MatrixXd& m, std::uint64_t seed = 1469598103934665603ULL);
std::string hash_hex(std::uint64_t h);

}  // namespace braingk::io
