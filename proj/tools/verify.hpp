#pragma once

// The acceptance suite. Each criterion recomputes its quantities from
// scratch and compares them against pinned targets and tolerances.

#include <lunezeta/options.hpp>

#include <string>
#include <vector>

namespace lunezeta::app {

struct VerifyOptions {
  EvalOptions eval;
  /// Relative perturbation applied to every determinant target. Used as a
  /// negative control: a sound suite must fail when it is nonzero.
  double det_target_eps = 0.0;
  /// When set, criterion 16 writes its sweep there as CSV.
  std::string figure_csv;
  int jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 16;

/// Criteria run by "verify quick".
std::vector<int> quick_criteria();
std::vector<int> all_criteria();

/// Never throws: library errors are reported as a failed criterion.
CriterionResult run_criterion(int id, const VerifyOptions& opts);

/// One line: "[PASS] 7 title: detail (0.12 s)".
std::string format_result(const CriterionResult& r);

}  // namespace lunezeta::app
