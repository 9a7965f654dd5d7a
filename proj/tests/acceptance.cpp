// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hsubgrad/cli.hpp"
#include "hsubgrad/oracles.hpp"
#include "hsubgrad/solver.hpp"
#include "hsubgrad/verify.hpp"

using namespace hsubgrad;

namespace {

const Manifold kDisk = Manifold::poincare_disk();

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s [%d] %s: %s; %.2fs%s\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs, in_time ? "" : " (over time budget)");
  std::fflush(stdout);
}

bool all_passed(const std::vector<InequalityReport>& reports, std::string& detail) {
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    detail += (detail.empty() ? "" : ", ") + r.check + " n=" + std::to_string(r.n_samples) +
              " viol=" + std::to_string(r.n_violations) + fmt(" worst=%.3g", r.worst_margin);
  }
  return ok;
}

Point random_point(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = 0.95 * std::sqrt(u(g));
  const double t = 2 * M_PI * u(g);
  return {r * std::cos(t), r * std::sin(t)};
}

Outcome geometry_kernel() {
  std::mt19937_64 g(101);
  std::uniform_real_distribution<double> len(1e-3, 5.0), ang(0.0, 2 * M_PI);
  double worst = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    const Point p = random_point(g), q = random_point(g);
    const Tangent v = kDisk.log(p, q);
    const Point back = kDisk.exp(v);
    worst = std::max({worst, std::abs(back.x - q.x), std::abs(back.y - q.y)});
    const double t = len(g), th = ang(g);
    const Tangent s = kDisk.tangent_along(p, std::cos(th), std::sin(th), t);
    const Point z = kDisk.exp(s);
    const Tangent s_back = kDisk.log(p, z);
    worst = std::max({worst, std::abs(s_back.vx - s.vx), std::abs(s_back.vy - s.vy),
                      std::abs(kDisk.distance(p, z) - t)});
  }
  double ray = 0.0;
  for (double t : {0.1, 1.0, 3.0}) {
    for (double th = 0.0; th < 2 * M_PI; th += 0.5) {
      const Point q{std::tanh(t / 2) * std::cos(th), std::tanh(t / 2) * std::sin(th)};
      ray = std::max(ray, std::abs(kDisk.distance({0, 0}, q) - t));
    }
  }
  return {worst < 1e-10 && ray < 1e-12,
          fmt("round-trip/unit-speed worst %.3g (tol 1e-10)", worst) +
              fmt(", ray distance worst %.3g (tol 1e-12)", ray)};
}

Outcome law_of_cosines() {
  SuiteOptions o;
  o.n = 100'000;
  o.seed = 7;
  std::string detail;
  const bool ok = all_passed(run_suite("law-of-cosines", o), detail);
  return {ok, detail};
}

Outcome key_theorem() {
  SuiteOptions o;
  o.n = 10'000;
  std::string detail;
  const auto key = run_suite("key-theorem", o);
  const auto per = run_suite("per-step", o);
  std::size_t verified = 0;
  for (const auto& r : key) verified += r.n_samples;
  bool ok = all_passed(key, detail);
  ok = all_passed(per, detail) && ok;
  ok = ok && verified >= 10'000;
  for (const auto& r : per) ok = ok && r.n_samples > 0;
  return {ok, detail};
}

Outcome busemann() {
  std::mt19937_64 g(202);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  double limit_err = 0.0, norm_err = 0.0, fd_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex eta = std::polar(1.0, ang(g));
    const Point x = random_point(g);
    // d(x, eta tanh(15)) - 30, with 1 - tanh^2(15) = sech^2(15).
    const double r = std::tanh(15.0), sech = 1.0 / std::cosh(15.0);
    const double dx = x.x - eta.real() * r, dy = x.y - eta.imag() * r;
    const double limit =
        std::acosh(1 + 2 * (dx * dx + dy * dy) / ((1 - x.norm_sq()) * sech * sech)) - 30.0;
    limit_err = std::max(limit_err, std::abs(busemann_value(eta, x) - limit));

    const Tangent grad = busemann_gradient(eta, x);
    norm_err = std::max(norm_err, std::abs(kDisk.norm(grad) - 1.0));

    const double th = ang(g);
    const Tangent s = kDisk.tangent_along(x, std::cos(th), std::sin(th), 1.0);
    const double h = 1e-5;
    const double fd = (busemann_value(eta, kDisk.exp(s.scaled(h))) - busemann_value(eta, x)) / h;
    fd_err = std::max(fd_err, std::abs(fd - kDisk.inner(grad, s)));
  }
  double axis_err = 0.0;
  const SubgradientOracle f = example_two_busemann();
  for (double q : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9}) {
    const Tangent gq = f.eval(kDisk, {0, q}).subgradient;
    axis_err = std::max({axis_err, std::abs(gq.vx),
                         std::abs(gq.vy - 2 * (1 - q * q) / (1 + q * q) * q)});
  }
  return {limit_err < 1e-6 && norm_err < 1e-10 && fd_err < 1e-4 && axis_err < 1e-12,
          fmt("limit %.3g (1e-6)", limit_err) + fmt(", unit norm %.3g (1e-10)", norm_err) +
              fmt(", finite diff %.3g (1e-4)", fd_err) + fmt(", y-axis %.3g (1e-12)", axis_err)};
}

Outcome reproduction() {
  const ReproduceOutcome r = reproduce_example({});
  const bool below = r.first_below_1e3.has_value();
  return {r.on_axis && r.per_step_bound && below,
          fmt("max |Re| %.3g", r.worst_real_part) +
              fmt(", worst per-step excess %.3g", r.worst_step_excess) +
              (below ? ", d(x^k,S) < 1e-3 first at k=" + std::to_string(*r.first_below_1e3)
                     : std::string(", d(x^k,S) never below 1e-3")) +
              fmt(", final d %.3g", r.final_dist)};
}

Outcome finite_termination() {
  SolveConfig cfg;
  cfg.oracle.name = "ball-hinge";
  cfg.oracle.center = {0, 0};
  cfg.oracle.radius = 0.3;
  cfg.x0 = {std::tanh(1.5), 0.0};
  cfg.schedule = StepSchedule::harmonic(1.0);
  cfg.max_iters = 10'000;
  const RunTrace t = run(cfg);
  const double d0 = kDisk.distance(cfg.x0, {0, 0});
  return {t.termination.kind == TerminationKind::SubgradientZero,
          "termination " + to_string(t.termination.kind) + " at k=" +
              std::to_string(t.termination.k) + fmt(", d(x0, center) = %.12g", d0)};
}

Outcome running_min() {
  SolveConfig cfg;
  cfg.oracle.name = "two-busemann";
  cfg.x0 = {0.0, 0.9};
  cfg.schedule = StepSchedule::sqrt_harmonic(0.5);
  cfg.max_iters = 10'000;
  cfg.stop_grad_tol = 0.0;
  const RunTrace t = run(cfg);
  const auto series = min_gap_series(t);
  const double at100 = series.at(100).second;
  const double at10k = series.back().second;
  const ComplexityReport rep = complexity_bound_report(t, 1.0, 1.0);
  bool holds = false;
  if (rep.fit_found) holds = complexity_bound_report(t, rep.fitted_a, rep.fitted_b).all_satisfied;
  return {at10k < at100 && rep.fit_found && holds,
          fmt("min gap N=1e2 %.3g", at100) + fmt(", N=1e4 %.3g", at10k) + " (run ended " +
              to_string(t.termination.kind) + " at k=" + std::to_string(t.termination.k) + ")" +
              (rep.fit_found ? fmt(", fitted A=%.3g", rep.fitted_a) + fmt(" B=%.3g", rep.fitted_b)
                             : std::string(", no (A,B) on the grid"))};
}

Outcome subgradient_inequality() {
  SuiteOptions o;
  o.n = 10'000;
  std::string detail;
  const auto reports = run_suite("subgradient", o);
  bool ok = all_passed(reports, detail);
  // Every registered oracle must be covered.
  for (const auto& name : oracle_names()) {
    bool covered = false;
    for (const auto& r : reports) covered = covered || r.check.find(name) != std::string::npos;
    if (!covered) {
      ok = false;
      detail += ", missing " + name;
    }
  }
  for (const auto& r : reports) ok = ok && r.n_samples >= 10'000 && r.tolerance <= 1e-9;
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "geometry kernel", 5, geometry_kernel);
  criterion(2, "law of cosines at the true curvature", 30, law_of_cosines);
  criterion(3, "key theorem and per-step margins", 60, key_theorem);
  criterion(4, "Busemann value and gradient", 0, busemann);
  criterion(5, "two-Busemann example reproduction", 10, reproduction);
  criterion(6, "finite termination with interior solutions", 0, finite_termination);
  criterion(7, "running-min decay and complexity fit", 0, running_min);
  criterion(8, "subgradient inequality for every oracle", 0, subgradient_inequality);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
