#include "hsubgrad/oracles.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "hsubgrad/error.hpp"

namespace hsubgrad {

namespace {

// Euclidean gap below which a point counts as the distance oracle's anchor.
constexpr double kAnchorSnap = 4.0 * std::numeric_limits<double>::epsilon();

Complex unit(Point eta) {
  const double r = std::hypot(eta.x, eta.y);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "Busemann direction must be nonzero");
  }
  return {eta.x / r, eta.y / r};
}

void require_disk(const Manifold& m, const std::string& who) {
  if (!m.is_disk()) {
    throw Error(ErrorCode::InvalidArgument, who + " is only defined on disk models");
  }
}

// Value and metric gradient of B^0_eta on a disk model, as Euclidean
// components. The scaled metric divides distances by kappa, so the value is
// divided by kappa and the metric gradient (g_kappa = g / kappa^2) is
// multiplied by kappa.
OracleValue busemann_on(const Manifold& m, Complex eta, Point p) {
  if (m.model() == Model::EuclideanPlane) {
    return {-(p.x * eta.real() + p.y * eta.imag()), {p, -eta.real(), -eta.imag()}};
  }
  const double k = m.curvature_bound();
  return {busemann_value(eta, p) / k, busemann_gradient(eta, p).scaled(k)};
}

// Unit subgradient pointing away from `target`, for distance-type objectives.
Tangent away_from(const Manifold& m, Point p, Point target) {
  const Tangent toward = m.log(p, target);
  const double n = m.norm(toward);
  return toward.scaled(-1.0 / n);
}

}  // namespace

std::string to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::SinglePoint: return "SinglePoint";
    case SolutionKind::XAxisDiameter: return "XAxisDiameter";
    case SolutionKind::ClosedBall: return "ClosedBall";
    case SolutionKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<double> SolutionSet::distance_to(const Manifold& m, Point p) const {
  switch (kind_) {
    case SolutionKind::SinglePoint: return m.distance(p, center_);
    case SolutionKind::XAxisDiameter: return m.distance_to_x_axis(p);
    case SolutionKind::ClosedBall: {
      const double d = m.distance(p, center_) - radius_;
      return d > 0.0 ? d : 0.0;
    }
    case SolutionKind::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Point> SolutionSet::nearest_point(const Manifold& m, Point p) const {
  switch (kind_) {
    case SolutionKind::SinglePoint: return center_;
    case SolutionKind::XAxisDiameter: return m.nearest_point_on_x_axis(p);
    case SolutionKind::ClosedBall: {
      const double d = m.distance(p, center_);
      if (d <= radius_) return p;
      const Tangent v = m.log(center_, p);
      return m.exp(v.scaled(radius_ / d));
    }
    case SolutionKind::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

SubgradientOracle::SubgradientOracle(std::string name, EvalFn eval,
                                     std::optional<double> known_min,
                                     SolutionSet solutions, BallSupFn ball_sup,
                                     bool smooth)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      known_min_(known_min),
      solutions_(solutions),
      ball_sup_(std::move(ball_sup)),
      smooth_(smooth) {}

double SubgradientOracle::ball_sup(const Manifold& m, Point center,
                                   double radius) const {
  if (!ball_sup_) {
    throw Error(ErrorCode::InvalidArgument, name_ + " has no analytic ball supremum");
  }
  return ball_sup_(m, center, radius);
}

SubgradientOracle SubgradientOracle::with_known_min(double f_star,
                                                    SolutionSet solutions) const {
  SubgradientOracle copy = *this;
  copy.known_min_ = f_star;
  copy.solutions_ = solutions;
  return copy;
}

double busemann_value(Complex eta, Point x) {
  return std::log(std::norm(x.z() - eta)) - std::log(one_minus_norm_sq(x));
}

Tangent busemann_gradient(Complex eta, Point p) {
  const Complex z = p.z();
  const Complex g = 0.5 * one_minus_norm_sq(p) * (z - eta) / (1.0 - eta * std::conj(z));
  return {p, g.real(), g.imag()};
}

SubgradientOracle busemann_oracle(Complex eta) {
  const double r = std::abs(eta);
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be nonzero");
  const Complex dir = eta / r;
  auto eval = [dir](const Manifold& m, Point p) { return busemann_on(m, dir, p); };
  return SubgradientOracle("busemann", eval, std::nullopt, SolutionSet::unknown(), {},
                           true);
}

SubgradientOracle busemann_oracle(Complex eta, Point base) {
  if (base == Point{}) return busemann_oracle(eta);
  const double r = std::abs(eta);
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be nonzero");
  const Complex dir = eta / r;
  const MobiusTransport transport(base);
  auto eval = [dir, transport](const Manifold& m, Point p) {
    require_disk(m, "busemann with a base point");
    const Point at_origin = transport.inverse(p);
    OracleValue v = busemann_on(m, dir, at_origin);
    v.subgradient = transport.push_forward(v.subgradient);
    v.subgradient.base = p;
    return v;
  };
  return SubgradientOracle("busemann", eval, std::nullopt, SolutionSet::unknown(), {},
                           true);
}

SubgradientOracle example_two_busemann() {
  auto eval = [](const Manifold& m, Point p) {
    require_disk(m, "two-busemann");
    const double k = m.curvature_bound();
    // B_beta + B_alpha = ln(1 + sinh^2 d(p, x-axis)); the sinh is available
    // in closed form, so the value is nonnegative and exactly 0 on the axis.
    const double s = 2.0 * p.y / one_minus_norm_sq(p);
    const Tangent gb = busemann_gradient({1.0, 0.0}, p);
    const Tangent ga = busemann_gradient({-1.0, 0.0}, p);
    return OracleValue{std::log1p(s * s) / k, {p, k * (gb.vx + ga.vx), k * (gb.vy + ga.vy)}};
  };
  return SubgradientOracle("two-busemann", eval, 0.0, SolutionSet::x_axis(), {}, true);
}

SubgradientOracle ball_hinge(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "ball_hinge radius must be positive");
  }
  auto eval = [center, radius](const Manifold& m, Point p) {
    const double d = m.distance(p, center);
    if (d <= radius) return OracleValue{0.0, {p, 0.0, 0.0}};
    return OracleValue{d - radius, away_from(m, p, center)};
  };
  auto sup = [center, radius](const Manifold& m, Point c, double delta) {
    const double v = m.distance(c, center) + delta - radius;
    return v > 0.0 ? v : 0.0;
  };
  return SubgradientOracle("ball-hinge", eval, 0.0,
                           SolutionSet::closed_ball(center, radius), sup);
}

SubgradientOracle distance_oracle(Point anchor) {
  auto eval = [anchor](const Manifold& m, Point p) {
    const double d = m.distance(p, anchor);
    // Within a few ulps of the anchor the direction is rounding noise; an
    // exact geodesic step onto the anchor lands here, not on it.
    if (std::hypot(p.x - anchor.x, p.y - anchor.y) <= kAnchorSnap) {
      return OracleValue{d, {p, 0.0, 0.0}};
    }
    return OracleValue{d, away_from(m, p, anchor)};
  };
  auto sup = [anchor](const Manifold& m, Point c, double delta) {
    return m.distance(c, anchor) + delta;
  };
  return SubgradientOracle("distance", eval, 0.0, SolutionSet::single_point(anchor), sup);
}

SubgradientOracle combine_sum(std::vector<SubgradientOracle> oracles,
                              std::vector<double> weights) {
  if (oracles.empty() || oracles.size() != weights.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "combine_sum needs equally long, nonempty oracle and weight lists");
  }
  bool smooth = true;
  std::string name = "sum(";
  for (std::size_t i = 0; i < oracles.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw Error(ErrorCode::InvalidArgument, "combine_sum weights must be positive");
    }
    smooth = smooth && oracles[i].smooth();
    name += (i ? "," : "") + oracles[i].name();
  }
  name += ")";
  auto eval = [oracles = std::move(oracles), weights = std::move(weights)](
                  const Manifold& m, Point p) {
    OracleValue out{0.0, {p, 0.0, 0.0}};
    for (std::size_t i = 0; i < oracles.size(); ++i) {
      const OracleValue v = oracles[i].eval(m, p);
      out.value += weights[i] * v.value;
      out.subgradient.vx += weights[i] * v.subgradient.vx;
      out.subgradient.vy += weights[i] * v.subgradient.vy;
    }
    return out;
  };
  return SubgradientOracle(name, eval, std::nullopt, SolutionSet::unknown(), {}, smooth);
}

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names = {"two-busemann", "ball-hinge",
                                                 "distance", "busemann"};
  return names;
}

SubgradientOracle make_oracle(const OracleSpec& spec) {
  if (spec.name == "two-busemann") return example_two_busemann();
  if (spec.name == "ball-hinge") return ball_hinge(spec.center, spec.radius);
  if (spec.name == "distance") return distance_oracle(spec.center);
  if (spec.name == "busemann") return busemann_oracle(unit(spec.eta), spec.center);
  throw Error(ErrorCode::ConfigError, "unknown oracle '" + spec.name + "'");
}

}  // namespace hsubgrad
