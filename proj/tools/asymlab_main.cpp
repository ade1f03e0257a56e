#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "asymlab/commands.hpp"

namespace {

// Operational exit codes; mathematical verdicts always exit 0.
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kSchema = 3;
constexpr int kUnresolved = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymlab: asymmetric norms, quasi-metrics, covering numbers, "
               "operator compactness and duality certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  asymlab::CliOptions opts;
  app.add_option("--input", opts.input_path, "instance bundle (JSON)");
  app.add_option("--seed", opts.seed, "seed for randomized runs");
  app.add_option("--tol", opts.tol, "floating tolerance (default 1e-9)");
  app.add_option("--jobs", opts.jobs, "parallel workers for batch runs");
  app.add_option("--epsilon", opts.epsilons, "radius / scale (repeatable)");
  app.add_option("--grid-density", opts.grid_density, "barycentric grid denominator");
  app.add_option("--format", opts.format, "json|csv (cover-vs-net)");
  app.add_flag("--timing", opts.timing, "append wall time to the report");
  app.add_option("--norm", opts.norm_id, "norm id");
  app.add_option("--op", opts.op_id, "operator id");
  app.add_option("--sequence", opts.sequence_id, "sequence id");
  app.add_option("--set", opts.set_id, "point-set id");
  app.add_option("--pool", opts.pool_id, "center-pool point-set id");
  app.add_option("--functional", opts.functional_id, "functional id");
  app.add_option("--mu", opts.mu, "domain norm selector: base|conjugate|symmetric");
  app.add_option("--nu", opts.nu, "codomain norm selector: base|conjugate|symmetric");
  app.add_option("--centers-from", opts.centers_from, "net centers: self|pool");
  app.add_option("--point", opts.point_literal, "vector literal, e.g. [1,0]");
  app.add_flag("--exact", opts.exact, "also run the exact net solver");

  for (const auto& name : asymlab::kCommands) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (const char* env_seed = std::getenv("ASYMLAB_SEED")) {
    try {
      opts.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "usage error: ASYMLAB_SEED is not an unsigned integer\n";
      return kUsage;
    }
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    auto start = std::chrono::steady_clock::now();
    asymlab::CommandOutcome out = asymlab::run_command(command, opts);
    if (out.is_csv) {
      std::cout << out.csv;
      return kOk;
    }
    if (opts.timing) {
      auto end = std::chrono::steady_clock::now();
      out.report["wall_time_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    }
    std::cout << out.report.dump(2) << "\n";
    return kOk;
  } catch (const asymlab::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const asymlab::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kSchema;
  } catch (const asymlab::RefError& e) {
    std::cerr << "reference error: " << e.what() << "\n";
    return kUnresolved;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
