#pragma once

// The Riemannian subgradient method
//
//   x^{k+1} = exp_{x^k}(lambda_k s^k),  s^k = -g^k / ||g^k||,  g^k in df(x^k)
//
// run until g^k vanishes (finite termination) or an iteration budget is spent,
// with a full per-iteration trace.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsubgrad/geometry.hpp"
#include "hsubgrad/oracles.hpp"
#include "hsubgrad/schedules.hpp"

namespace hsubgrad {

struct SolveConfig {
  Manifold manifold = Manifold::poincare_disk();
  OracleSpec oracle;
  StepSchedule schedule = StepSchedule::harmonic(1.0);
  Point x0{};
  std::size_t max_iters = 10'000;
  // ||g^k|| at or below this counts as g^k = 0.
  double stop_grad_tol = 1e-12;
  std::size_t record_every = 1;
  std::uint64_t seed = 0;

  // Throws InvalidArgument when an invariant does not hold.
  void validate() const;
};

struct IterationRecord {
  std::size_t k = 0;
  Point point;
  double f_value = 0.0;
  double grad_norm = 0.0;
  double lambda = 0.0;
  std::optional<double> dist_to_solution;
  // x^k was produced by an exp step whose result had to be clamped.
  bool drift = false;
};

enum class TerminationKind { SubgradientZero, MaxIters, NumericalFailure };

std::string to_string(TerminationKind kind);

struct Termination {
  TerminationKind kind = TerminationKind::MaxIters;
  std::size_t k = 0;
  std::string reason;
};

struct RunSummary {
  double best_value = 0.0;
  std::optional<double> best_gap;
  std::optional<double> final_dist_to_solution;
  // Number of exp steps taken and the step sums over them.
  std::size_t steps = 0;
  double sum_lambda = 0.0;
  double sum_lambda_sq = 0.0;
  std::size_t drift_events = 0;
};

struct RunTrace {
  SolveConfig config;
  std::string oracle_name;
  std::optional<double> f_star;
  SolutionSet solutions = SolutionSet::unknown();
  std::vector<IterationRecord> records;
  Termination termination;
  RunSummary summary;
};

struct StepResult {
  Point next;
  bool drift = false;
  OracleValue at_current;
  double grad_norm = 0.0;
};

// One iteration from x with step length lambda. Throws ZeroSubgradient when
// the subgradient norm is at or below stop_grad_tol.
StepResult sm_step(const Manifold& m, const SubgradientOracle& oracle, Point x,
                   double lambda, double stop_grad_tol = 0.0);

RunTrace run(const SolveConfig& cfg);
RunTrace run(const SolveConfig& cfg, const SubgradientOracle& oracle);

// Recomputes the summary from the records, termination and config alone.
RunSummary summarize(const RunTrace& trace);

// Running minimum of f(x^j) - f* over the recorded iterates. Throws
// MissingFStar when the oracle's minimum is unknown.
std::vector<std::pair<std::size_t, double>> min_gap_series(const RunTrace& trace);

struct ComplexityRow {
  std::size_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

struct ComplexityReport {
  double a = 0.0;
  double b = 0.0;
  Point solution_point;
  double initial_distance = 0.0;
  std::vector<ComplexityRow> rows;
  bool all_satisfied = false;
  // Smallest grid pair (by A + B) for which every row holds.
  bool fit_found = false;
  double fitted_a = 0.0;
  double fitted_b = 0.0;
};

// Compares min_{k<=N}(f(x^k) - f*) against
// (kappa A sum lambda_k^2 + B d^2(x*, x^0)) / sum lambda_k for every recorded
// N. x* defaults to the solution-set point nearest to the last iterate.
ComplexityReport complexity_bound_report(const RunTrace& trace, double a, double b,
                                         std::optional<Point> solution_point = std::nullopt);

}  // namespace hsubgrad
