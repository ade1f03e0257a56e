#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace asymlab {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string note;  // first failure description, empty when clean
};

struct SuiteReport {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::vector<PropertyResult> results;
  bool all_passed = false;
};

/// Runs the seeded invariant battery across every module. Deterministic for
/// a fixed seed: instance engines derive from (seed, property, instance),
/// results are ordered by property index whatever the job count.
SuiteReport run_property_suite(std::uint64_t seed, double tol, int jobs = 1);

nlohmann::ordered_json suite_report_json(const SuiteReport& report);

}  // namespace asymlab
