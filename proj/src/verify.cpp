#include "hsubgrad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "hsubgrad/error.hpp"

namespace hsubgrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

// Point reached from p along Euclidean direction angle theta after metric
// length `length`.
Point shoot(const Manifold& m, Point p, double theta, double length) {
  if (length == 0.0) return p;
  return m.exp(m.tangent_along(p, std::cos(theta), std::sin(theta), length));
}

}  // namespace

// ---------------------------------------------------------------- triangles

TriangleSample make_triangle(const Manifold& m, Point p, Point q, Point r) {
  TriangleSample t{p, q, r};
  t.a = m.distance(q, r);
  t.b = m.distance(p, q);
  t.c = m.distance(p, r);
  const Tangent to_q = m.log(p, q);
  const Tangent to_r = m.log(p, r);
  t.alpha = (to_q.is_zero() || to_r.is_zero()) ? 0.0 : m.angle(to_q, to_r);
  return t;
}

double law_of_cosines_margin(double kappa, const TriangleSample& t) {
  if (t.a < 1e-12 || t.b < 1e-12 || t.c < 1e-12) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle side below 1e-12");
  }
  const double ka = kappa * t.a;
  const double kb = kappa * t.b;
  const double kc = kappa * t.c;
  // cosh b cosh c - sinh b sinh c cos(alpha) = cosh(b - c) + 2 sinh b sinh c sin^2(alpha/2)
  // cosh(b - c) - cosh a = -2 sinh((a + b - c)/2) sinh((a - b + c)/2)
  const double half = std::sin(0.5 * t.alpha);
  const double opening = 2.0 * std::sinh(kb) * std::sinh(kc) * half * half;
  const double closing = 2.0 * std::sinh(0.5 * (ka + kb - kc)) * std::sinh(0.5 * (ka - kb + kc));
  return opening - closing;
}

// ------------------------------------------------------------- key theorem

std::string to_string(HypothesisMode mode) {
  return mode == HypothesisMode::Analytic ? "analytic" : "net-checked";
}

std::vector<Point> ball_net(const Manifold& m, Point center, double radius,
                            std::size_t size) {
  std::vector<Point> net;
  net.reserve(size);
  net.push_back(center);
  if (size <= 1) return net;
  const std::size_t boundary = std::max<std::size_t>(1, (size - 1) * 4 / 5);
  for (std::size_t i = 0; i < boundary; ++i) {
    net.push_back(shoot(m, center, kTwoPi * static_cast<double>(i) / boundary, radius));
  }
  const std::size_t rest = size - 1 - boundary;
  constexpr std::size_t rings = 4;
  const std::size_t per_ring = std::max<std::size_t>(1, rest / rings);
  for (std::size_t i = 0; net.size() < size; ++i) {
    const std::size_t ring = i / per_ring;
    const double rho = radius * static_cast<double>(ring % rings + 1) / (rings + 1);
    const double theta = kTwoPi * (static_cast<double>(i % per_ring) + 0.5) / per_ring;
    net.push_back(shoot(m, center, theta, rho));
  }
  return net;
}

BallSup ball_sup(const Manifold& m, const SubgradientOracle& oracle, Point center,
                 double radius, std::size_t net_size) {
  if (oracle.has_analytic_ball_sup()) {
    return {oracle.ball_sup(m, center, radius), HypothesisMode::Analytic};
  }
  double sup = -std::numeric_limits<double>::infinity();
  for (Point u : ball_net(m, center, radius, net_size)) sup = std::max(sup, oracle.value(m, u));
  return {sup, HypothesisMode::NetChecked};
}

HypothesisMode verify_key_hypotheses(const Manifold& m, const SubgradientOracle& oracle,
                                     const KeyConfig& cfg, std::size_t net_size) {
  if (!(cfg.delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (m.distance(cfg.x, cfg.x_bar) < 2.0 * cfg.delta) {
    throw Error(ErrorCode::HypothesisUnverified, "d(x, x_bar) < 2 delta");
  }
  const BallSup sup = ball_sup(m, oracle, cfg.x_bar, cfg.delta, net_size);
  if (!(sup.value < oracle.value(m, cfg.x))) {
    throw Error(ErrorCode::HypothesisUnverified, "f(u) >= f(x) somewhere on B[x_bar, delta]");
  }
  return sup.mode;
}

KeyEvaluation key_theorem_margin(double kappa, const Manifold& m,
                                 const SubgradientOracle& oracle, const KeyConfig& cfg,
                                 std::size_t net_size) {
  if (!(cfg.lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  KeyEvaluation out;
  out.mode = verify_key_hypotheses(m, oracle, cfg, net_size);
  const StepResult step = sm_step(m, oracle, cfg.x, cfg.lambda);
  out.z = step.next;
  const double d_x = m.distance(cfg.x, cfg.x_bar);
  const double d_zx = m.distance(out.z, cfg.x);
  const double d_z = m.distance(out.z, cfg.x_bar);
  const double rhs = std::cosh(kappa * d_x) * std::cosh(kappa * d_zx) -
                     std::sinh(kappa * d_zx) * std::sinh(0.5 * kappa * cfg.delta);
  out.margin = rhs - std::cosh(kappa * d_z);
  return out;
}

PerStepMargins per_step_margins(double kappa, double d_k, double d_next, double lambda,
                                double delta) {
  const double ck = std::cosh(kappa * d_k);
  const double cn = std::cosh(kappa * d_next);
  const double sl = std::sinh(kappa * lambda);
  const double sd = std::sinh(0.5 * kappa * delta);
  PerStepMargins out;
  out.cdelta = ck * std::cosh(kappa * lambda) - sl * sd - cn;
  out.cdelta_divided = ck * std::tanh(0.5 * kappa * lambda) - sd - (cn - ck) / sl;
  return out;
}

std::vector<HarvestedStep> harvest_per_step(const RunTrace& trace,
                                            const SubgradientOracle& oracle, Point x_bar,
                                            double delta, std::size_t net_size) {
  if (trace.config.record_every != 1) {
    throw Error(ErrorCode::InvalidArgument, "per-step harvest needs record_every = 1");
  }
  const Manifold& m = trace.config.manifold;
  const double kappa = m.curvature_bound();
  const double sup = ball_sup(m, oracle, x_bar, delta, net_size).value;
  std::vector<HarvestedStep> out;
  for (std::size_t i = 0; i + 1 < trace.records.size(); ++i) {
    const auto& cur = trace.records[i];
    const auto& nxt = trace.records[i + 1];
    if (nxt.k != cur.k + 1) continue;
    const double d_k = m.distance(cur.point, x_bar);
    if (d_k < 2.0 * delta || !(sup < cur.f_value)) continue;
    HarvestedStep h;
    h.k = cur.k;
    h.d_k = d_k;
    h.d_next = m.distance(nxt.point, x_bar);
    h.lambda = cur.lambda;
    h.margins = per_step_margins(kappa, h.d_k, h.d_next, h.lambda, delta);
    out.push_back(h);
  }
  return out;
}

// --------------------------------------------------------------- reporting

void InequalityReport::add(double margin) {
  if (n_samples == 0) worst_margin = margin;
  ++n_samples;
  worst_margin = std::min(worst_margin, margin);
  std::size_t bin;
  if (!(margin >= -tolerance)) {
    ++n_violations;
    bin = 0;
  } else if (margin <= tolerance) {
    bin = 1;
  } else if (margin <= 1e-6) {
    bin = 2;
  } else if (margin <= 1e-3) {
    bin = 3;
  } else if (margin <= 1.0) {
    bin = 4;
  } else {
    bin = 5;
  }
  ++histogram[bin];
}

void InequalityReport::merge(const InequalityReport& other) {
  if (other.n_samples > 0) {
    worst_margin = n_samples == 0 ? other.worst_margin : std::min(worst_margin, other.worst_margin);
  }
  n_samples += other.n_samples;
  n_rejected += other.n_rejected;
  n_violations += other.n_violations;
  for (std::size_t i = 0; i < kBins; ++i) histogram[i] += other.histogram[i];
}

nlohmann::json InequalityReport::to_json() const {
  return {
      {"check", check},
      {"n", n_samples},
      {"rejected", n_rejected},
      {"violations", n_violations},
      {"worst_margin", n_samples ? nlohmann::json(worst_margin) : nlohmann::json(nullptr)},
      {"tolerance", tolerance},
      {"seed", seed},
      {"hypothesis_mode", hypothesis_mode},
      {"histogram", histogram},
  };
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finaliser over the pair.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(static_cast<std::uint64_t>(index)));
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

InequalityReport fuzz(const std::string& check, const SampleCheck& sample, std::size_t n,
                      std::uint64_t seed, double tolerance,
                      const std::string& hypothesis_mode, unsigned threads) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "fuzz needs at least one sample");
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  auto blank = [&] {
    InequalityReport r;
    r.check = check;
    r.tolerance = tolerance;
    r.seed = seed;
    r.hypothesis_mode = hypothesis_mode;
    return r;
  };
  std::vector<InequalityReport> parts(threads, blank());
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned t) {
    try {
      const std::size_t begin = n * t / threads;
      const std::size_t end = n * (t + 1) / threads;
      for (std::size_t i = begin; i < end; ++i) {
        std::mt19937_64 rng(sample_seed(seed, i));
        const auto margin = sample(rng, i);
        if (margin) {
          parts[t].add(*margin);
        } else {
          ++parts[t].n_rejected;
        }
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  InequalityReport out = blank();
  for (const auto& p : parts) out.merge(p);
  return out;
}

Point sample_disk_point(std::mt19937_64& rng, double radius_cap) {
  // Hyperbolic area inside radius rho is proportional to cosh(rho) - 1.
  const double u = uniform(rng, 0.0, 1.0);
  const double rho = std::acosh(1.0 + u * (std::cosh(radius_cap) - 1.0));
  const double theta = uniform(rng, 0.0, kTwoPi);
  const double r = std::tanh(0.5 * rho);
  return {r * std::cos(theta), r * std::sin(theta)};
}

TriangleSample sample_triangle(const Manifold& m, std::mt19937_64& rng, double radius_cap) {
  while (true) {
    const Point p = sample_disk_point(rng, radius_cap);
    const Point q = sample_disk_point(rng, radius_cap);
    const Point r = sample_disk_point(rng, radius_cap);
    TriangleSample t = make_triangle(m, p, q, r);
    if (t.a >= 1e-3 && t.b >= 1e-3 && t.c >= 1e-3) return t;
  }
}

// ------------------------------------------------------------ sublevel sets

SublevelReport sublevel_boundedness_check(const Manifold& m, const SubgradientOracle& oracle,
                                          double level, std::size_t n_rays,
                                          double max_radius) {
  const auto origin = oracle.solutions().nearest_point(m, Point{});
  if (!origin) {
    throw Error(ErrorCode::InvalidArgument, "sublevel check needs a known solution set");
  }
  if (n_rays == 0) throw Error(ErrorCode::InvalidArgument, "need at least one ray");
  SublevelReport out;
  out.origin = oracle.solutions().kind() == SolutionKind::ClosedBall
                   ? oracle.solutions().center()
                   : *origin;
  out.report.check = "sublevel-" + oracle.name();
  out.report.hypothesis_mode = oracle.solutions().compact() ? "compact" : "noncompact";

  constexpr double march = 0.25;
  for (std::size_t j = 0; j < n_rays; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n_rays);
    auto f_at = [&](double r) { return oracle.value(m, shoot(m, out.origin, theta, r)); };
    double lo = 0.0;
    double r = 0.0;
    double f = f_at(0.0);
    while (f <= level && r < max_radius) {
      lo = r;
      r = std::min(max_radius, r + march);
      f = f_at(r);
    }
    out.ray_angle.push_back(theta);
    out.report.add(f - level);
    if (f <= level) {
      out.witness_radius.push_back(std::nullopt);
      continue;
    }
    double hi = r;
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f_at(mid) > level ? hi : lo) = mid;
    }
    out.witness_radius.push_back(hi);
    out.max_witness_radius = std::max(out.max_witness_radius, hi);
  }
  return out;
}

// ------------------------------------------------------------------- suites

namespace {

double tol_or(const SuiteOptions& o, double fallback) {
  return o.tolerance ? *o.tolerance : fallback;
}

std::vector<InequalityReport> law_of_cosines_suite(const SuiteOptions& o) {
  const Manifold disk = Manifold::poincare_disk();
  std::vector<InequalityReport> out;
  out.push_back(fuzz(
      "law-of-cosines-equality-k1",
      [&](std::mt19937_64& rng, std::size_t) -> std::optional<double> {
        return -std::abs(law_of_cosines_margin(1.0, sample_triangle(disk, rng)));
      },
      o.n, o.seed, tol_or(o, 1e-9), "none", o.threads));
  out.push_back(fuzz(
      "law-of-cosines-lower-k2",
      [&](std::mt19937_64& rng, std::size_t) -> std::optional<double> {
        return law_of_cosines_margin(2.0, sample_triangle(disk, rng));
      },
      o.n, o.seed, tol_or(o, 1e-12), "none", o.threads));
  return out;
}

std::optional<double> key_distance_sample(std::mt19937_64& rng) {
  const Manifold disk = Manifold::poincare_disk();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Point anchor = sample_disk_point(rng, 2.0);
    const auto oracle = distance_oracle(anchor);
    KeyConfig cfg;
    cfg.x_bar = shoot(disk, anchor, uniform(rng, 0.0, kTwoPi), uniform(rng, 0.0, 1.0));
    cfg.delta = uniform(rng, 0.01, 1.0);
    const double reach = disk.distance(cfg.x_bar, anchor) + cfg.delta + uniform(rng, 1e-3, 3.0);
    cfg.x = shoot(disk, anchor, uniform(rng, 0.0, kTwoPi), reach);
    cfg.lambda = log_uniform(rng, 1e-4, 3.0);
    if (disk.distance(cfg.x, cfg.x_bar) < 2.0 * cfg.delta) continue;
    return key_theorem_margin(1.0, disk, oracle, cfg).margin;
  }
  return std::nullopt;
}

std::optional<double> key_two_busemann_sample(std::mt19937_64& rng) {
  static const auto oracle = example_two_busemann();
  const Manifold disk = Manifold::poincare_disk();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    KeyConfig cfg;
    cfg.x_bar = sample_disk_point(rng, 2.0);
    cfg.delta = uniform(rng, 0.01, 0.8);
    cfg.x = sample_disk_point(rng, 3.5);
    cfg.lambda = log_uniform(rng, 1e-4, 3.0);
    // Keep a clear analytic gap (f depends only on the distance to the
    // x-axis) so that passing the finite net is not a near miss.
    if (disk.distance(cfg.x, cfg.x_bar) < 2.0 * cfg.delta) continue;
    if (disk.distance_to_x_axis(cfg.x) <
        disk.distance_to_x_axis(cfg.x_bar) + cfg.delta + 1e-3) {
      continue;
    }
    return key_theorem_margin(1.0, disk, oracle, cfg).margin;
  }
  return std::nullopt;
}

std::vector<InequalityReport> key_theorem_suite(const SuiteOptions& o) {
  std::vector<InequalityReport> out;
  out.push_back(fuzz(
      "key-theorem-distance",
      [](std::mt19937_64& rng, std::size_t) { return key_distance_sample(rng); }, o.n,
      o.seed, tol_or(o, 1e-10), "analytic", o.threads));
  out.push_back(fuzz(
      "key-theorem-two-busemann",
      [](std::mt19937_64& rng, std::size_t) { return key_two_busemann_sample(rng); }, o.n,
      o.seed, tol_or(o, 1e-10), "net-checked", o.threads));
  return out;
}

std::vector<InequalityReport> per_step_suite(const SuiteOptions& o) {
  struct Harvest {
    RunTrace trace;
    SubgradientOracle oracle;
    Point x_bar;
    std::vector<double> deltas;
  };
  std::vector<Harvest> sources;
  {
    SolveConfig cfg;
    cfg.oracle.name = "two-busemann";
    cfg.x0 = {0.0, 0.9};
    cfg.max_iters = 10'000;
    auto oracle = make_oracle(cfg.oracle);
    sources.push_back({run(cfg, oracle), oracle, {0.0, 0.0}, {0.02, 0.05, 0.1, 0.25, 0.5, 1.0}});
  }
  {
    SolveConfig cfg;
    cfg.oracle.name = "distance";
    cfg.oracle.center = {0.2, -0.3};
    cfg.x0 = {-0.6, 0.5};
    cfg.schedule = StepSchedule::sqrt_harmonic(0.5);
    cfg.max_iters = 2'000;
    auto oracle = make_oracle(cfg.oracle);
    sources.push_back({run(cfg, oracle), oracle, cfg.oracle.center, {0.01, 0.1, 0.5}});
  }
  {
    SolveConfig cfg;
    cfg.oracle.name = "ball-hinge";
    cfg.oracle.center = {0.0, 0.0};
    cfg.oracle.radius = 0.3;
    cfg.x0 = {std::tanh(1.5), 0.0};
    auto oracle = make_oracle(cfg.oracle);
    sources.push_back({run(cfg, oracle), oracle, cfg.oracle.center, {0.05, 0.2}});
  }

  InequalityReport cdelta;
  cdelta.check = "per-step-cdelta";
  cdelta.tolerance = tol_or(o, 1e-10);
  cdelta.seed = o.seed;
  cdelta.hypothesis_mode = "analytic+net-checked";
  InequalityReport divided = cdelta;
  divided.check = "per-step-cdelta-divided";
  for (const auto& s : sources) {
    for (double delta : s.deltas) {
      for (const auto& h : harvest_per_step(s.trace, s.oracle, s.x_bar, delta)) {
        cdelta.add(h.margins.cdelta);
        divided.add(h.margins.cdelta_divided);
      }
    }
  }
  return {cdelta, divided};
}

std::vector<InequalityReport> sublevel_suite(const SuiteOptions& o) {
  const Manifold disk = Manifold::poincare_disk();
  std::vector<InequalityReport> out;
  for (const auto& oracle : {distance_oracle({0.0, 0.0}), distance_oracle({0.3, -0.2}),
                             ball_hinge({0.0, 0.0}, 0.3), ball_hinge({-0.1, 0.4}, 1.0)}) {
    InequalityReport r = sublevel_boundedness_check(disk, oracle, 1.0).report;
    r.check += "-" + std::to_string(out.size() % 2 + 1);
    r.tolerance = tol_or(o, 0.0);
    r.seed = o.seed;
    out.push_back(r);
  }
  return out;
}

std::vector<InequalityReport> gradcheck_suite(const SuiteOptions& o) {
  const Manifold disk = Manifold::poincare_disk();
  std::vector<InequalityReport> out;
  out.push_back(fuzz(
      "busemann-unit-norm",
      [&](std::mt19937_64& rng, std::size_t) -> std::optional<double> {
        const double phi = uniform(rng, 0.0, kTwoPi);
        const Complex eta{std::cos(phi), std::sin(phi)};
        const Point p = sample_disk_point(rng, 8.0);
        return -std::abs(disk.norm(busemann_gradient(eta, p)) - 1.0);
      },
      o.n, o.seed, tol_or(o, 1e-10), "none", o.threads));

  auto fd_check = [&](const std::string& name, auto make) {
    return fuzz(
        name,
        [&](std::mt19937_64& rng, std::size_t) -> std::optional<double> {
          const SubgradientOracle oracle = make(rng);
          const Point p = sample_disk_point(rng, 4.0);
          const double theta = uniform(rng, 0.0, kTwoPi);
          constexpr double h = 1e-5;
          const Tangent s = disk.tangent_along(p, std::cos(theta), std::sin(theta), 1.0);
          const OracleValue at = oracle.eval(disk, p);
          const double fd = (oracle.value(disk, disk.exp(s.scaled(h))) - at.value) / h;
          return -std::abs(fd - disk.inner(at.subgradient, s));
        },
        o.n, o.seed, tol_or(o, 1e-4), "none", o.threads);
  };
  out.push_back(fd_check("busemann-finite-difference", [](std::mt19937_64& rng) {
    const double phi = uniform(rng, 0.0, kTwoPi);
    return busemann_oracle(Complex{std::cos(phi), std::sin(phi)});
  }));
  out.push_back(fd_check("two-busemann-finite-difference",
                         [](std::mt19937_64&) { return example_two_busemann(); }));

  InequalityReport axis;
  axis.check = "two-busemann-y-axis-gradient";
  axis.tolerance = tol_or(o, 1e-12);
  axis.seed = o.seed;
  const auto f = example_two_busemann();
  for (double q : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9}) {
    const Tangent g = f.eval(disk, {0.0, q}).subgradient;
    const double expected = 2.0 * (1.0 - q * q) / (1.0 + q * q) * q;
    axis.add(-std::max(std::abs(g.vx), std::abs(g.vy - expected)));
  }
  out.push_back(axis);
  return out;
}

std::vector<InequalityReport> subgradient_suite(const SuiteOptions& o) {
  struct Case {
    std::string name;
    Manifold manifold;
    SubgradientOracle oracle;
  };
  const Manifold disk = Manifold::poincare_disk();
  const std::vector<Case> cases = {
      {"two-busemann", disk, example_two_busemann()},
      {"ball-hinge", disk, ball_hinge({0.1, 0.2}, 0.3)},
      {"distance", disk, distance_oracle({-0.3, 0.4})},
      {"busemann", disk, busemann_oracle(Complex{0.6, 0.8})},
      {"busemann-based", disk, busemann_oracle(Complex{-0.28, 0.96}, {0.2, -0.1})},
      {"distance-scaled-k2", Manifold::scaled_disk(2.0), distance_oracle({0.1, 0.1})},
      {"two-busemann-scaled-k2", Manifold::scaled_disk(2.0), example_two_busemann()},
  };
  std::vector<InequalityReport> out;
  for (const auto& c : cases) {
    out.push_back(fuzz(
        "subgradient-inequality-" + c.name,
        [&](std::mt19937_64& rng, std::size_t) -> std::optional<double> {
          const Point x = sample_disk_point(rng, 4.0);
          const Point y = sample_disk_point(rng, 4.0);
          const OracleValue at = c.oracle.eval(c.manifold, x);
          return c.oracle.value(c.manifold, y) - at.value -
                 c.manifold.inner(at.subgradient, c.manifold.log(x, y));
        },
        o.n, o.seed, tol_or(o, 1e-9), "none", o.threads));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "law-of-cosines", "key-theorem", "per-step", "sublevel", "gradcheck", "subgradient", "all"};
  return names;
}

std::vector<InequalityReport> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "law-of-cosines") return law_of_cosines_suite(opts);
  if (name == "key-theorem") return key_theorem_suite(opts);
  if (name == "per-step") return per_step_suite(opts);
  if (name == "sublevel") return sublevel_suite(opts);
  if (name == "gradcheck") return gradcheck_suite(opts);
  if (name == "subgradient") return subgradient_suite(opts);
  if (name == "all") {
    std::vector<InequalityReport> out;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + name + "'");
}

}  // namespace hsubgrad
