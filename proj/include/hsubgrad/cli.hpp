#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hsubgrad/solver.hpp"
#include "hsubgrad/verify.hpp"

namespace hsubgrad {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitViolation = 4,
  kExitReproduction = 5,
};

// Runs a config file and writes <name>.trace.json, <name>.trace.csv and
// <name>.summary.json. `out_dir` overrides the config's output_dir.
int cmd_solve(const std::filesystem::path& config,
              const std::optional<std::filesystem::path>& out_dir, std::ostream& out,
              std::ostream& err);

int cmd_verify(const std::string& suite, const SuiteOptions& opts,
               const std::optional<std::filesystem::path>& report_path, std::ostream& out,
               std::ostream& err);

struct ReproduceOptions {
  std::size_t steps = 10'000;
  Point x0{0.0, 0.9};
  std::optional<std::filesystem::path> out_dir;
};

struct ReproduceOutcome {
  RunTrace trace;
  // (i) every iterate on the y-axis, |Re| < 1e-10
  bool on_axis = false;
  // (ii) d(x^{k+1}, 0) <= max(lambda_k, d(x^k, 0)) + 1e-12 at every step
  bool per_step_bound = false;
  // (iii) d(x^N, S) <= max lambda over the last 10% of steps
  bool final_bound = false;
  double worst_real_part = 0.0;
  double worst_step_excess = 0.0;
  double final_dist = 0.0;
  double tail_max_lambda = 0.0;
  // First k with d(x^k, S) < 1e-3, if reached.
  std::optional<std::size_t> first_below_1e3;
  std::string report;

  bool passed() const { return on_axis && per_step_bound && final_bound; }
};

// Two-Busemann example on the y-axis with lambda_k = 1/(k+1).
ReproduceOutcome reproduce_example(const ReproduceOptions& opts);

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err);

// Full command-line entry point (subcommands solve, verify, reproduce).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsubgrad
