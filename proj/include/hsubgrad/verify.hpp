#pragma once

// Executable forms of the comparison inequalities behind the convergence
// analysis, plus a deterministic sampling harness. Every check reports a
// margin (right-hand side minus left-hand side); a margin below -tolerance
// is a violation.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsubgrad/geometry.hpp"
#include "hsubgrad/oracles.hpp"
#include "hsubgrad/solver.hpp"

namespace hsubgrad {

// ---------------------------------------------------------------- triangles

struct TriangleSample {
  Point p, q, r;
  // a = d(q, r) is opposite the vertex p; b = d(p, q), c = d(p, r).
  double a = 0.0, b = 0.0, c = 0.0;
  // Angle at p between the sides towards q and r.
  double alpha = 0.0;
};

TriangleSample make_triangle(const Manifold& m, Point p, Point q, Point r);

// [cosh(kb)cosh(kc) - sinh(kb)sinh(kc)cos(alpha)] - cosh(ka), evaluated in a
// cancellation-free arrangement. Nonnegative when the sectional curvature is
// at least -k^2, and zero on a surface of constant curvature -k^2. Throws
// DegenerateTriangle when a side is below 1e-12.
double law_of_cosines_margin(double kappa, const TriangleSample& t);

// ------------------------------------------------------------- key theorem

struct KeyConfig {
  Point x;
  Point x_bar;
  double delta = 0.0;
  double lambda = 0.0;
};

enum class HypothesisMode { Analytic, NetChecked };

std::string to_string(HypothesisMode mode);

// Points of B[center, radius]: mostly on the bounding circle (where a convex
// function attains its maximum over the ball) plus interior rings.
std::vector<Point> ball_net(const Manifold& m, Point center, double radius,
                            std::size_t size = 1000);

// Supremum of f over B[center, radius]: exact when the oracle knows it,
// otherwise the maximum over ball_net().
struct BallSup {
  double value = 0.0;
  HypothesisMode mode = HypothesisMode::NetChecked;
};

BallSup ball_sup(const Manifold& m, const SubgradientOracle& oracle, Point center,
                 double radius, std::size_t net_size = 1000);

// Checks d(x, x_bar) >= 2 delta and f(u) < f(x) on B[x_bar, delta]. Throws
// HypothesisUnverified when either fails.
HypothesisMode verify_key_hypotheses(const Manifold& m, const SubgradientOracle& oracle,
                                     const KeyConfig& cfg, std::size_t net_size = 1000);

struct KeyEvaluation {
  double margin = 0.0;
  HypothesisMode mode = HypothesisMode::NetChecked;
  Point z;
};

// z = exp_x(lambda s), s = -g/||g||; margin of
// cosh(k d(z,x_bar)) <= cosh(k d(x,x_bar)) cosh(k d(z,x)) - sinh(k d(z,x)) sinh(k delta/2).
KeyEvaluation key_theorem_margin(double kappa, const Manifold& m,
                                 const SubgradientOracle& oracle, const KeyConfig& cfg,
                                 std::size_t net_size = 1000);

struct PerStepMargins {
  // cosh(k d_{k+1}) <= cosh(k d_k) cosh(k l) - sinh(k l) sinh(k delta/2)
  double cdelta = 0.0;
  // (cosh(k d_{k+1}) - cosh(k d_k)) / sinh(k l) <= cosh(k d_k) tanh(k l/2) - sinh(k delta/2)
  double cdelta_divided = 0.0;
};

PerStepMargins per_step_margins(double kappa, double d_k, double d_next, double lambda,
                                double delta);

struct HarvestedStep {
  std::size_t k = 0;
  double d_k = 0.0;
  double d_next = 0.0;
  double lambda = 0.0;
  PerStepMargins margins;
};

// Consecutive recorded iterates of a trace (record_every must be 1) at which
// the key-theorem hypotheses hold for (x_bar, delta).
std::vector<HarvestedStep> harvest_per_step(const RunTrace& trace,
                                            const SubgradientOracle& oracle, Point x_bar,
                                            double delta, std::size_t net_size = 1000);

// --------------------------------------------------------------- reporting

struct InequalityReport {
  // Histogram bins over margins: < -tol, [-tol, tol], (tol, 1e-6], (1e-6, 1e-3],
  // (1e-3, 1], > 1.
  static constexpr std::size_t kBins = 6;

  std::string check;
  std::size_t n_samples = 0;
  std::size_t n_rejected = 0;
  std::size_t n_violations = 0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::string hypothesis_mode = "none";
  std::array<std::size_t, kBins> histogram{};

  void add(double margin);
  void merge(const InequalityReport& other);
  bool passed() const { return n_violations == 0; }
  nlohmann::json to_json() const;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

// A sample returns its margin, or nullopt when its hypotheses fail and it is
// to be skipped. The generator is seeded from (seed, index) only.
using SampleCheck = std::function<std::optional<double>(std::mt19937_64&, std::size_t)>;

// Runs n independent samples, in parallel when threads != 1 (0 means
// HS_THREADS or the hardware concurrency). Deterministic for a given seed.
// Throws InvalidArgument for n == 0.
InequalityReport fuzz(const std::string& check, const SampleCheck& sample, std::size_t n,
                      std::uint64_t seed, double tolerance,
                      const std::string& hypothesis_mode = "none", unsigned threads = 0);

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);
unsigned default_thread_count();

// Point at unit-disk distance <= radius_cap from the origin, with radius
// distributed uniformly in hyperbolic area.
Point sample_disk_point(std::mt19937_64& rng, double radius_cap);
// Nondegenerate triangle (every side >= 1e-3) with vertices from
// sample_disk_point.
TriangleSample sample_triangle(const Manifold& m, std::mt19937_64& rng,
                               double radius_cap = 5.0);

// ------------------------------------------------------------ sublevel sets

struct SublevelReport {
  InequalityReport report;
  // Per ray: radius at which f first exceeds the level, if within max_radius.
  std::vector<std::optional<double>> witness_radius;
  std::vector<double> ray_angle;
  double max_witness_radius = 0.0;
  Point origin;
};

// Marches along geodesic rays from a solution point until f exceeds `level`.
// Margin per ray is f - level at the stopping radius; a ray with no witness
// up to max_radius is a violation (WitnessNotFound).
SublevelReport sublevel_boundedness_check(const Manifold& m, const SubgradientOracle& oracle,
                                          double level, std::size_t n_rays = 64,
                                          double max_radius = 50.0);

// ------------------------------------------------------------------- suites

struct SuiteOptions {
  std::size_t n = 10'000;
  std::uint64_t seed = 7;
  // Overrides every check's default tolerance when set.
  std::optional<double> tolerance;
  unsigned threads = 0;
};

const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown suite name. "all" runs every suite.
std::vector<InequalityReport> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace hsubgrad
