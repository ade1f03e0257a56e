#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymlab/json_io.hpp"

namespace asymlab {

/// Bad invocation: unknown ids, missing flags, unsupported option values,
/// violated operation preconditions.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliOptions {
  std::string input_path;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int jobs = 1;
  std::vector<double> epsilons;
  int grid_density = 12;
  std::string format = "json";
  bool timing = false;

  std::string norm_id;
  std::string op_id;
  std::string sequence_id;
  std::string set_id;
  std::string pool_id;
  std::string functional_id;
  std::string mu = "base";
  std::string nu = "base";
  std::string centers_from = "self";
  std::string point_literal;  // JSON array for eval
  bool exact = false;
};

struct CommandOutcome {
  Json report;
  std::string csv;
  bool is_csv = false;
};

extern const std::vector<std::string> kCommands;

/// Routes one subcommand to its module operation. Mathematical verdicts
/// (invalid norm, unbounded, not compact) are ordinary report content;
/// only operational problems throw (UsageError, SchemaError, RefError).
CommandOutcome run_command(const std::string& command, const CliOptions& opts);

}  // namespace asymlab
