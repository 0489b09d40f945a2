#pragma once

// The twelve acceptance checks, shared by `steintile repro all` and the
// acceptance test binary.

#include <functional>
#include <string>
#include <vector>

#include "steintile/serialize.hpp"

namespace steintile::repro {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  /// One-line summary of what was measured.
  std::string detail;
  serialize::Json data;
};

struct Options {
  unsigned threads = 1;
  /// Criteria to run; empty means all.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

/// "AC<id> PASS|FAIL <seconds>s <title>: <detail>"
std::string summary_line(const CriterionResult& r);

/// S(m, n) grid for 2 <= m, n <= max as CSV; the header row lists n.
std::string copula_table_csv(const serialize::Json& ac4_data);

/// Writes summary.json, ac<id>.json per criterion and copula_table.csv.
void write_report(const std::string& dir, const std::vector<CriterionResult>& results);

}  // namespace steintile::repro
