#include "hsubgrad/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsubgrad/error.hpp"

namespace hsubgrad {

namespace {

bool finite(double v) { return std::isfinite(v); }

std::vector<double> fit_grid() {
  std::vector<double> grid;
  for (int e = -32; e <= 32; ++e) grid.push_back(std::pow(10.0, e / 4.0));
  return grid;
}

}  // namespace

std::string to_string(TerminationKind kind) {
  switch (kind) {
    case TerminationKind::SubgradientZero: return "SubgradientZero";
    case TerminationKind::MaxIters: return "MaxIters";
    case TerminationKind::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

void SolveConfig::validate() const {
  if (max_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
  if (!(stop_grad_tol >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "stop_grad_tol must be >= 0");
  }
  if (record_every < 1) throw Error(ErrorCode::InvalidArgument, "record_every must be >= 1");
  if (!manifold.contains(x0)) {
    throw Error(ErrorCode::OutsideModel, "x0 is not a point of " + manifold.describe());
  }
}

StepResult sm_step(const Manifold& m, const SubgradientOracle& oracle, Point x,
                   double lambda, double stop_grad_tol) {
  StepResult out;
  out.at_current = oracle.eval(m, x);
  out.grad_norm = m.norm(out.at_current.subgradient);
  if (out.grad_norm <= stop_grad_tol) {
    throw Error(ErrorCode::ZeroSubgradient, "subgradient vanishes at the current iterate");
  }
  const Tangent step = out.at_current.subgradient.scaled(-lambda / out.grad_norm);
  const ExpResult e = m.exp_tracked(step);
  out.next = e.point;
  out.drift = e.drift;
  return out;
}

RunTrace run(const SolveConfig& cfg) { return run(cfg, make_oracle(cfg.oracle)); }

RunTrace run(const SolveConfig& cfg, const SubgradientOracle& oracle) {
  cfg.validate();
  const Manifold& m = cfg.manifold;
  const SolutionSet& solutions = oracle.solutions();

  RunTrace trace;
  trace.config = cfg;
  trace.oracle_name = oracle.name();
  trace.f_star = oracle.known_min();
  trace.solutions = solutions;

  Point x = cfg.x0;
  bool drift = false;
  for (std::size_t k = 0;; ++k) {
    IterationRecord rec;
    rec.k = k;
    rec.point = x;
    rec.lambda = cfg.schedule.step(k);
    rec.drift = drift;

    OracleValue ov;
    try {
      ov = oracle.eval(m, x);
    } catch (const Error& e) {
      trace.records.push_back(rec);
      trace.termination = {TerminationKind::NumericalFailure, k, e.what()};
      break;
    }
    rec.f_value = ov.value;
    rec.grad_norm = m.norm(ov.subgradient);
    rec.dist_to_solution = solutions.distance_to(m, x);

    if (!finite(rec.f_value) || !finite(rec.grad_norm)) {
      trace.records.push_back(rec);
      trace.termination = {TerminationKind::NumericalFailure, k,
                           "non-finite objective value or subgradient"};
      break;
    }
    const bool stop = rec.grad_norm <= cfg.stop_grad_tol;
    const bool last = stop || k == cfg.max_iters;
    if (k % cfg.record_every == 0 || last) trace.records.push_back(rec);
    if (stop) {
      trace.termination = {TerminationKind::SubgradientZero, k, {}};
      break;
    }
    if (k == cfg.max_iters) {
      trace.termination = {TerminationKind::MaxIters, k, {}};
      break;
    }

    const Tangent step = ov.subgradient.scaled(-rec.lambda / rec.grad_norm);
    try {
      const ExpResult e = m.exp_tracked(step);
      x = e.point;
      drift = e.drift;
    } catch (const Error& e) {
      if (trace.records.empty() || trace.records.back().k != k) trace.records.push_back(rec);
      trace.termination = {TerminationKind::NumericalFailure, k, e.what()};
      break;
    }
  }
  trace.summary = summarize(trace);
  return trace;
}

RunSummary summarize(const RunTrace& trace) {
  RunSummary s;
  s.best_value = std::numeric_limits<double>::infinity();
  for (const auto& r : trace.records) {
    s.best_value = std::min(s.best_value, r.f_value);
    if (r.drift) ++s.drift_events;
  }
  if (trace.f_star && !trace.records.empty()) s.best_gap = s.best_value - *trace.f_star;
  if (!trace.records.empty()) s.final_dist_to_solution = trace.records.back().dist_to_solution;
  s.steps = trace.termination.k;
  if (s.steps > 0) {
    const PartialSums sums = partial_sums(trace.config.schedule, s.steps - 1);
    s.sum_lambda = sums.sum;
    s.sum_lambda_sq = sums.sum_sq;
  }
  return s;
}

std::vector<std::pair<std::size_t, double>> min_gap_series(const RunTrace& trace) {
  if (!trace.f_star) {
    throw Error(ErrorCode::MissingFStar, "oracle '" + trace.oracle_name + "' has no known minimum");
  }
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(trace.records.size());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : trace.records) {
    best = std::min(best, r.f_value - *trace.f_star);
    out.emplace_back(r.k, best);
  }
  return out;
}

ComplexityReport complexity_bound_report(const RunTrace& trace, double a, double b,
                                         std::optional<Point> solution_point) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "A and B must be positive");
  }
  const auto gaps = min_gap_series(trace);
  const Manifold& m = trace.config.manifold;
  if (!solution_point && !trace.records.empty()) {
    solution_point = trace.solutions.nearest_point(m, trace.records.back().point);
  }
  if (!solution_point) {
    throw Error(ErrorCode::MissingSolutionPoint, "no solution point available for the bound");
  }

  ComplexityReport rep;
  rep.a = a;
  rep.b = b;
  rep.solution_point = *solution_point;
  rep.initial_distance = m.distance(*solution_point, trace.config.x0);
  const double kappa = m.curvature_bound();
  const double d0_sq = rep.initial_distance * rep.initial_distance;

  // Prefix sums of lambda and lambda^2 at every recorded index.
  std::vector<double> s1(gaps.size());
  std::vector<double> s2(gaps.size());
  {
    KahanSum sum;
    KahanSum sum_sq;
    std::size_t k = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      for (; k <= gaps[i].first; ++k) {
        const double l = trace.config.schedule.step(k);
        sum.add(l);
        sum_sq.add(l * l);
      }
      s1[i] = sum.value();
      s2[i] = sum_sq.value();
    }
  }

  auto holds_everywhere = [&](double ca, double cb) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i].second > (kappa * ca * s2[i] + cb * d0_sq) / s1[i]) return false;
    }
    return true;
  };

  rep.all_satisfied = true;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    ComplexityRow row;
    row.n = gaps[i].first;
    row.lhs = gaps[i].second;
    row.rhs = (kappa * a * s2[i] + b * d0_sq) / s1[i];
    row.satisfied = row.lhs <= row.rhs;
    rep.all_satisfied = rep.all_satisfied && row.satisfied;
    rep.rows.push_back(row);
  }

  const auto grid = fit_grid();
  double best_score = std::numeric_limits<double>::infinity();
  for (double ca : grid) {
    for (double cb : grid) {
      if (ca + cb >= best_score) break;
      if (holds_everywhere(ca, cb)) {
        best_score = ca + cb;
        rep.fit_found = true;
        rep.fitted_a = ca;
        rep.fitted_b = cb;
        break;
      }
    }
  }
  return rep;
}

}  // namespace hsubgrad
