#pragma once

// Geometry of the Poincare disk, its curvature-scaled variants and the flat
// plane. Points are stored as plain Euclidean coordinates; which region is
// admissible depends on the owning Manifold. Tangent vectors carry their base
// point and Euclidean components; their length is always measured by the
// conformal metric of the manifold they are used with.

#include <complex>
#include <string>

namespace hsubgrad {

using Complex = std::complex<double>;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Complex z() const { return {x, y}; }
  static Point from(Complex c) { return {c.real(), c.imag()}; }
  double norm_sq() const { return x * x + y * y; }

  friend bool operator==(const Point&, const Point&) = default;
};

// Checked constructor for points of the open unit disk. Throws OutsideModel
// for boundary and exterior points.
Point make_disk_point(double x, double y);

struct Tangent {
  Point base;
  double vx = 0.0;
  double vy = 0.0;

  Complex v() const { return {vx, vy}; }
  bool is_zero() const { return vx == 0.0 && vy == 0.0; }
  Tangent scaled(double s) const { return {base, s * vx, s * vy}; }
  Tangent operator-() const { return {base, -vx, -vy}; }
};

enum class Model { PoincareDisk, ScaledDisk, EuclideanPlane };

std::string to_string(Model model);

struct ExpResult {
  Point point;
  // True when rounding pushed the result onto or past the unit circle and it
  // was pulled back radially.
  bool drift = false;
};

class Manifold {
 public:
  static Manifold poincare_disk() { return Manifold(Model::PoincareDisk, 1.0); }
  static Manifold scaled_disk(double kappa);
  static Manifold euclidean_plane() { return Manifold(Model::EuclideanPlane, 0.0); }

  Model model() const { return model_; }
  bool is_disk() const { return model_ != Model::EuclideanPlane; }
  // kappa such that the sectional curvature is -kappa^2 (0 for the plane).
  double curvature_bound() const { return kappa_; }
  std::string describe() const;

  bool contains(Point p) const;
  // Throws OutsideModel when p is not a point of this manifold.
  Point point(double x, double y) const;

  // Ratio between metric length and Euclidean length of a vector at p.
  double conformal_factor(Point p) const;
  double inner(const Tangent& u, const Tangent& v) const;
  double norm(const Tangent& v) const;
  // Tangent at p with metric length `length` in the Euclidean direction
  // (dx, dy). Throws ZeroVector when the direction vanishes.
  Tangent tangent_along(Point p, double dx, double dy, double length) const;

  double distance(Point p, Point q) const;
  ExpResult exp_tracked(const Tangent& v) const;
  Point exp(const Tangent& v) const { return exp_tracked(v).point; }
  Tangent log(Point p, Point q) const;
  // Angle in [0, pi] between two nonzero tangents at the same base.
  double angle(const Tangent& u, const Tangent& v) const;

  double distance_to_x_axis(Point p) const;
  Point nearest_point_on_x_axis(Point p) const;

 private:
  Manifold(Model model, double kappa) : model_(model), kappa_(kappa) {}

  Model model_;
  double kappa_;
};

// 1 - |p|^2 with a fused evaluation to limit cancellation near the boundary.
double one_minus_norm_sq(Point p);

// Poincare distance on the unit disk (curvature -1).
double disk_distance(Point p, Point q);

// The disk isometry z -> (z + p) / (1 + conj(p) z). It is the map
// (|xi| xi z + |xi|^2 p) / (|xi| conj(p) xi z + |xi|^2) with the direction
// parameter xi = (1 - |p|^2) / 2 taken real and positive, so it sends 0 to p
// and its differential at 0 is the positive real scalar 1 - |p|^2.
class MobiusTransport {
 public:
  explicit MobiusTransport(Point p);

  Point base() const { return Point::from(p_); }
  Point forward(Point z) const;
  Point inverse(Point w) const;
  // Differential of forward() at t.base, applied to t.
  Tangent push_forward(const Tangent& t) const;
  // Differential of inverse() at t.base, applied to t.
  Tangent pull_back(const Tangent& t) const;

 private:
  Complex p_;
};

}  // namespace hsubgrad
