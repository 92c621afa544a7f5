#pragma once

// Reproduction suite: one check per published result plus property checks.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pathdepth {

struct CriterionResult {
  int id = 0;
  std::string tag;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock limit in seconds; 0 when none applies.
  double limit = 0;
  /// The limit applies to each case separately.
  bool limit_per_case = false;
};

struct SuiteOptions {
  /// Run only criteria with this tag or numeric id.
  std::optional<std::string> only;
  /// Corrupt one structure constant of T3 (negative control).
  bool inject_sign_fault = false;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<std::string> suite_tags();
std::vector<CriterionResult> run_suite(const SuiteOptions& options);
std::string format_result(const CriterionResult& r);

}  // namespace pathdepth
