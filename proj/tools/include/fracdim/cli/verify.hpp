#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace fracdim::cli {

inline constexpr int kClaimCount = 14;

struct ClaimResult {
  int id = 0;
  std::string claim;
  std::string expected;
  std::string got;
  std::string tolerance;
  bool pass = false;
};

struct VerifyOptions {
  std::vector<int> claims;  // empty selects all
  std::filesystem::path golden_dir;
};

// FRACDIM_GOLDEN_DIR if set, else the directory compiled into the build.
std::filesystem::path default_golden_dir();

std::vector<ClaimResult> run_claims(const VerifyOptions& options);
std::string format_report(std::span<const ClaimResult> results);
bool all_pass(std::span<const ClaimResult> results);

void write_goldens(const std::filesystem::path& dir);

}  // namespace fracdim::cli
