#pragma once

// The acceptance suite: thirteen checks shared by the acceptance binary and
// `verify-all`.

#include <string>
#include <vector>

#include "mpr/int128.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/records.hpp"
#include "mpr/report.hpp"

namespace mpr {

inline constexpr unsigned kCriterionCount = 13;

struct SuiteOptions {
  unsigned workers = 1;
  i128 ceiling = kDefaultCeiling;
  /// Adds the PSL(4,2) ~ Alt(8) cross-check to criterion 7.
  bool stretch = false;
};

struct CriterionResult {
  unsigned id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string summary;
  /// Deterministic detail records; never contain timings.
  std::vector<OutputRecord> records;
};

/// Short slug, e.g. "cyclotomic-identity".
const char* criterion_name(unsigned id);

CriterionResult run_criterion(unsigned id, const SuiteOptions& options = {});

/// One bound report per criterion: lhs = passing checks, rhs = checks.
BoundReport criterion_report(const CriterionResult& r);

}  // namespace mpr
