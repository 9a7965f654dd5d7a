#include "hsubgrad/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hsubgrad/error.hpp"

namespace hsubgrad {

namespace {

constexpr double kDriftThreshold = 1.0 - 1e-15;
constexpr double kClampRadius = 1.0 - 1e-12;

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutsideModel: return "OutsideModel";
    case ErrorCode::ResultOutsideDisk: return "ResultOutsideDisk";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroSubgradient: return "ZeroSubgradient";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::MissingFStar: return "MissingFStar";
    case ErrorCode::MissingSolutionPoint: return "MissingSolutionPoint";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

std::string to_string(Model model) {
  switch (model) {
    case Model::PoincareDisk: return "poincare";
    case Model::ScaledDisk: return "scaled";
    case Model::EuclideanPlane: return "euclidean";
  }
  return "unknown";
}

Point make_disk_point(double x, double y) {
  Point p{x, y};
  if (!finite(p) || p.norm_sq() >= 1.0) {
    std::ostringstream msg;
    msg << "(" << x << ", " << y << ") is not inside the unit disk";
    throw Error(ErrorCode::OutsideModel, msg.str());
  }
  return p;
}

double one_minus_norm_sq(Point p) {
  return std::fma(-p.x, p.x, std::fma(-p.y, p.y, 1.0));
}

double disk_distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double chord = std::hypot(dx, dy);
  if (chord == 0.0) return 0.0;
  // Same value as arccosh(1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2))), written
  // through sinh(d/2) so that short distances keep full relative precision.
  const double denom = std::sqrt(one_minus_norm_sq(p) * one_minus_norm_sq(q));
  return 2.0 * std::asinh(chord / denom);
}

Manifold Manifold::scaled_disk(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidArgument, "scaled disk needs kappa > 0");
  }
  return Manifold(Model::ScaledDisk, kappa);
}

std::string Manifold::describe() const {
  std::ostringstream out;
  out << to_string(model_);
  if (model_ == Model::ScaledDisk) out << "(kappa=" << kappa_ << ")";
  return out.str();
}

bool Manifold::contains(Point p) const {
  if (!finite(p)) return false;
  return model_ == Model::EuclideanPlane || p.norm_sq() < 1.0;
}

Point Manifold::point(double x, double y) const {
  if (model_ == Model::EuclideanPlane) {
    Point p{x, y};
    if (!finite(p)) throw Error(ErrorCode::OutsideModel, "non-finite point");
    return p;
  }
  return make_disk_point(x, y);
}

double Manifold::conformal_factor(Point p) const {
  switch (model_) {
    case Model::PoincareDisk: return 2.0 / one_minus_norm_sq(p);
    case Model::ScaledDisk: return 2.0 / (one_minus_norm_sq(p) * kappa_);
    case Model::EuclideanPlane: return 1.0;
  }
  return 1.0;
}

double Manifold::inner(const Tangent& u, const Tangent& v) const {
  const double c = conformal_factor(u.base);
  return c * c * (u.vx * v.vx + u.vy * v.vy);
}

double Manifold::norm(const Tangent& v) const {
  return conformal_factor(v.base) * std::hypot(v.vx, v.vy);
}

Tangent Manifold::tangent_along(Point p, double dx, double dy,
                                double length) const {
  const double e = std::hypot(dx, dy);
  if (e == 0.0) throw Error(ErrorCode::ZeroVector, "direction has zero length");
  const double s = length / (e * conformal_factor(p));
  return {p, s * dx, s * dy};
}

double Manifold::distance(Point p, Point q) const {
  switch (model_) {
    case Model::PoincareDisk: return disk_distance(p, q);
    case Model::ScaledDisk: return disk_distance(p, q) / kappa_;
    case Model::EuclideanPlane: return std::hypot(p.x - q.x, p.y - q.y);
  }
  return 0.0;
}

ExpResult Manifold::exp_tracked(const Tangent& v) const {
  const Point p = v.base;
  if (v.is_zero()) return {p, false};
  if (model_ == Model::EuclideanPlane) {
    return {{p.x + v.vx, p.y + v.vy}, false};
  }
  // The step length in unit-disk units does not depend on kappa: the scaled
  // metric divides both the norm and the distance by the same factor.
  const double euclid = std::hypot(v.vx, v.vy);
  const double disk_length = 2.0 * euclid / one_minus_norm_sq(p);
  const Complex dir = v.v() / euclid;
  const Complex at_origin = std::tanh(0.5 * disk_length) * dir;
  const Complex z = p.z();
  Complex result = (at_origin + z) / (1.0 + std::conj(z) * at_origin);

  const double r = std::abs(result);
  if (!std::isfinite(r)) {
    throw Error(ErrorCode::ResultOutsideDisk, "exp produced a non-finite point");
  }
  if (r >= kDriftThreshold) {
    result *= kClampRadius / r;
    return {Point::from(result), true};
  }
  return {Point::from(result), false};
}

Tangent Manifold::log(Point p, Point q) const {
  if (p == q) return {p, 0.0, 0.0};
  if (model_ == Model::EuclideanPlane) return {p, q.x - p.x, q.y - p.y};
  // Move p to the origin, read the direction there, push it back. The
  // transport's differential at the origin is a positive real scalar, so the
  // direction is unchanged and only the length needs converting.
  const Complex z = p.z();
  const Complex w = (q.z() - z) / (1.0 - std::conj(z) * q.z());
  const double r = std::abs(w);
  if (r == 0.0) return {p, 0.0, 0.0};
  const double disk_length = 2.0 * std::atanh(r);
  const double euclid = 0.5 * disk_length * one_minus_norm_sq(p);
  const Complex v = (euclid / r) * w;
  return {p, v.real(), v.imag()};
}

double Manifold::angle(const Tangent& u, const Tangent& v) const {
  if (u.is_zero() || v.is_zero()) {
    throw Error(ErrorCode::ZeroVector, "angle needs two nonzero tangents");
  }
  // Every model is conformal to the plane, so the metric angle is the
  // Euclidean one. atan2 keeps accuracy near 0 and pi where acos does not.
  const double dot = u.vx * v.vx + u.vy * v.vy;
  const double cross = u.vx * v.vy - u.vy * v.vx;
  return std::atan2(std::abs(cross), dot);
}

double Manifold::distance_to_x_axis(Point p) const {
  switch (model_) {
    case Model::PoincareDisk:
      return std::asinh(2.0 * std::abs(p.y) / one_minus_norm_sq(p));
    case Model::ScaledDisk:
      return std::asinh(2.0 * std::abs(p.y) / one_minus_norm_sq(p)) / kappa_;
    case Model::EuclideanPlane: return std::abs(p.y);
  }
  return 0.0;
}

Point Manifold::nearest_point_on_x_axis(Point p) const {
  if (model_ == Model::EuclideanPlane || p.y == 0.0) return {p.x, 0.0};
  if (p.x == 0.0) return {0.0, 0.0};
  // The perpendicular from p is a circle centred on the real axis and
  // orthogonal to the unit circle; its foot s solves s^2 - 2cs + 1 = 0 with
  // c = (1 + |p|^2) / (2x). Take the root inside the disk in a
  // cancellation-free form.
  const double a = 1.0 + p.norm_sq();
  const double s = 2.0 * p.x / (a + std::sqrt(a * a - 4.0 * p.x * p.x));
  return {s, 0.0};
}

MobiusTransport::MobiusTransport(Point p) : p_(p.z()) {
  if (std::norm(p_) >= 1.0) {
    throw Error(ErrorCode::OutsideModel, "Mobius base must lie in the disk");
  }
}

Point MobiusTransport::forward(Point z) const {
  const Complex w = z.z();
  return Point::from((w + p_) / (1.0 + std::conj(p_) * w));
}

Point MobiusTransport::inverse(Point w) const {
  const Complex z = w.z();
  return Point::from((z - p_) / (1.0 - std::conj(p_) * z));
}

Tangent MobiusTransport::push_forward(const Tangent& t) const {
  const Complex z = t.base.z();
  const Complex den = 1.0 + std::conj(p_) * z;
  const Complex d = (1.0 - std::norm(p_)) / (den * den);
  const Complex v = d * t.v();
  return {forward(t.base), v.real(), v.imag()};
}

Tangent MobiusTransport::pull_back(const Tangent& t) const {
  const Complex w = t.base.z();
  const Complex den = 1.0 - std::conj(p_) * w;
  const Complex d = (1.0 - std::norm(p_)) / (den * den);
  const Complex v = d * t.v();
  return {inverse(t.base), v.real(), v.imag()};
}

}  // namespace hsubgrad
