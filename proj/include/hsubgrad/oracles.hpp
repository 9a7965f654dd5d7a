#pragma once

// Geodesically convex objectives with a first-order oracle. Each oracle
// returns the value and a single element of the subdifferential at the query
// point, together with whatever is known about its minimum.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsubgrad/geometry.hpp"

namespace hsubgrad {

struct OracleValue {
  double value = 0.0;
  Tangent subgradient;
};

enum class SolutionKind { SinglePoint, XAxisDiameter, ClosedBall, Unknown };

std::string to_string(SolutionKind kind);

class SolutionSet {
 public:
  static SolutionSet single_point(Point p) { return {SolutionKind::SinglePoint, p, 0.0}; }
  static SolutionSet x_axis() { return {SolutionKind::XAxisDiameter, {}, 0.0}; }
  static SolutionSet closed_ball(Point center, double radius) {
    return {SolutionKind::ClosedBall, center, radius};
  }
  static SolutionSet unknown() { return {SolutionKind::Unknown, {}, 0.0}; }

  SolutionKind kind() const { return kind_; }
  Point center() const { return center_; }
  double radius() const { return radius_; }
  bool known() const { return kind_ != SolutionKind::Unknown; }
  bool compact() const {
    return kind_ == SolutionKind::SinglePoint || kind_ == SolutionKind::ClosedBall;
  }

  // Exact for every kind except Unknown, which yields nullopt.
  std::optional<double> distance_to(const Manifold& m, Point p) const;
  std::optional<Point> nearest_point(const Manifold& m, Point p) const;

 private:
  SolutionSet(SolutionKind kind, Point center, double radius)
      : kind_(kind), center_(center), radius_(radius) {}

  SolutionKind kind_;
  Point center_;
  double radius_;
};

class SubgradientOracle {
 public:
  using EvalFn = std::function<OracleValue(const Manifold&, Point)>;
  // Exact supremum of f over the closed ball B[center, radius].
  using BallSupFn = std::function<double(const Manifold&, Point, double)>;

  SubgradientOracle(std::string name, EvalFn eval,
                    std::optional<double> known_min = std::nullopt,
                    SolutionSet solutions = SolutionSet::unknown(),
                    BallSupFn ball_sup = {}, bool smooth = false);

  OracleValue eval(const Manifold& m, Point p) const { return eval_(m, p); }
  double value(const Manifold& m, Point p) const { return eval_(m, p).value; }

  const std::string& name() const { return name_; }
  const std::optional<double>& known_min() const { return known_min_; }
  const SolutionSet& solutions() const { return solutions_; }
  bool has_analytic_ball_sup() const { return static_cast<bool>(ball_sup_); }
  double ball_sup(const Manifold& m, Point center, double radius) const;
  // True when the oracle's subgradient is a gradient (C^1 objective).
  bool smooth() const { return smooth_; }

  SubgradientOracle with_known_min(double f_star, SolutionSet solutions) const;

 private:
  std::string name_;
  EvalFn eval_;
  std::optional<double> known_min_;
  SolutionSet solutions_;
  BallSupFn ball_sup_;
  bool smooth_;
};

// Busemann function of the geodesic ray t -> eta tanh(t/2) on the unit disk:
// ln(|x - eta|^2 / (1 - |x|^2)).
double busemann_value(Complex eta, Point x);
// Its gradient for the curvature -1 metric, as Euclidean components at p:
// (1 - |p|^2)/2 * (p - eta) / (1 - eta conj(p)).
Tangent busemann_gradient(Complex eta, Point p);

// B^0_eta on any model. On a scaled disk both value and metric gradient are
// rescaled; on the plane it degenerates to x -> -<x, eta>.
SubgradientOracle busemann_oracle(Complex eta);
// Busemann function of the ray leaving `base` in direction eta, obtained by
// pre-composing B^0_eta with the Mobius transport of `base` to the origin.
SubgradientOracle busemann_oracle(Complex eta, Point base);

// f = B_beta + B_alpha for the rays along +x and -x. Minimum 0 on the whole
// x-axis.
SubgradientOracle example_two_busemann();

// f(p) = max(0, d(p, center) - radius).
SubgradientOracle ball_hinge(Point center, double radius);

// f(p) = d(p, anchor). The subgradient is zero at the anchor and at points
// within 4 machine epsilons of it.
SubgradientOracle distance_oracle(Point anchor);

SubgradientOracle combine_sum(std::vector<SubgradientOracle> oracles,
                              std::vector<double> weights);

// Named construction used by configuration files.
struct OracleSpec {
  std::string name = "two-busemann";
  // Ball centre, distance anchor, or Busemann base point.
  Point center{};
  double radius = 0.5;
  // Busemann direction (normalised on use).
  Point eta{1.0, 0.0};
};

SubgradientOracle make_oracle(const OracleSpec& spec);
const std::vector<std::string>& oracle_names();

}  // namespace hsubgrad
