#include <iostream>

#include "pathdepth/suite.hpp"

int main() {
  pathdepth::SuiteOptions options;
  options.on_result = [](const pathdepth::CriterionResult& r) {
    std::cout << pathdepth::format_result(r) << std::endl;
  };
  auto results = pathdepth::run_suite(options);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
