#pragma once

#include <cstdint>
#include <string>

#include "orbitsep/mra.hpp"
#include "orbitsep/report.hpp"

namespace orbitsep {

// Exit code discipline shared by every suite:
//   0 all assertions passed; 1 suite ran with violations (witnesses in the
//   output); 2 usage/config error; 3 resource cap exceeded.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct SuiteResult {
  Report report;
  int exit_code = kExitPass;
  std::string summary_line;
};

/// Families addressable from the invariance/separation subcommands.
enum class Family {
  kConjugation,
  kDiagOffdiag,
  kFStar,
  kFourier,
  kVeronese,
  kSortSep,
  kCloud,
};

/// Parses a family name; throws DimensionError on unknown names.
Family parse_family(const std::string& name);

struct FamilyParams {
  int n = 4;
  int d = 2;
  int j = 1;
  int count = 0;  // 0 = sort-separator default 2nd+1
};

SuiteResult run_invariance_suite(Family family, const FamilyParams& params,
                                 std::size_t trials, double tol,
                                 std::uint64_t seed, int threads);

SuiteResult run_separation_suite(Family family, const FamilyParams& params,
                                 std::size_t pairs, double tol,
                                 std::uint64_t seed, int threads);

SuiteResult run_galois_suite(int n, int trials, std::uint64_t seed,
                             std::size_t cap, int threads);

SuiteResult run_badset_suite(int n, std::size_t trials, double zero_tol_factor,
                             std::uint64_t seed, std::size_t cap, int threads);

SuiteResult run_veronese_suite(int n, int j, std::size_t pairs,
                               std::size_t budget, std::uint64_t seed,
                               int threads);

SuiteResult run_sortsep_suite(int n, int d, int count, std::size_t pairs,
                              std::uint64_t seed, int threads);

SuiteResult run_pointcloud_suite(int d, int n, std::size_t invariance_trials,
                                 std::size_t pairs, double tol,
                                 std::uint64_t seed, int threads);

/// Feature listing for clouds loaded from CSV; with two paths also runs the
/// alignment oracle and compares features.
SuiteResult run_pointcloud_files(const std::string& path1,
                                 const std::string& path2, double tol);

SuiteResult run_mra_suite(const MraConfig& cfg);

/// Flat key=value config file for the mra subcommand; '#' starts a comment.
MraConfig parse_mra_config_file(const std::string& path, MraConfig base);

}  // namespace orbitsep
