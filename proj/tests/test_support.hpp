#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <functional>
#include <random>

#include "hsubgrad/geometry.hpp"

namespace hsubgrad::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Uniform point of the disk of Euclidean radius r_max.
inline Point random_disk_point(std::mt19937_64& g, double r_max = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = r_max * std::sqrt(u(g));
  const double t = 2.0 * M_PI * u(g);
  return {r * std::cos(t), r * std::sin(t)};
}

inline double random_angle(std::mt19937_64& g) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(g);
}

// The textbook closed form arccosh(1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2))).
inline double arccosh_distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double a = 1.0 - p.x * p.x - p.y * p.y;
  const double b = 1.0 - q.x * q.x - q.y * q.y;
  return std::acosh(1.0 + 2.0 * (dx * dx + dy * dy) / (a * b));
}

// Golden-section minimisation of a unimodal function on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         int iters = 200) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Integrates the geodesic equation of the metric 4|dx|^2 / (1-|x|^2)^2 with
// RK4 for unit time:
//   x'' = -2 <grad(ln l), x'> x' + |x'|^2 grad(ln l),  grad(ln l) = 2x / (1-|x|^2).
inline Point integrate_disk_geodesic(Point p, double vx, double vy, int steps = 4000) {
  struct State {
    double x, y, u, v;
  };
  auto rhs = [](const State& s) {
    const double w = 1.0 - s.x * s.x - s.y * s.y;
    const double gx = 2.0 * s.x / w;
    const double gy = 2.0 * s.y / w;
    const double dot = gx * s.u + gy * s.v;
    const double sp = s.u * s.u + s.v * s.v;
    return State{s.u, s.v, -2.0 * dot * s.u + sp * gx, -2.0 * dot * s.v + sp * gy};
  };
  auto axpy = [](const State& a, double h, const State& b) {
    return State{a.x + h * b.x, a.y + h * b.y, a.u + h * b.u, a.v + h * b.v};
  };
  State s{p.x, p.y, vx, vy};
  const double h = 1.0 / steps;
  for (int i = 0; i < steps; ++i) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, h / 2, k1));
    const State k3 = rhs(axpy(s, h / 2, k2));
    const State k4 = rhs(axpy(s, h, k3));
    s.x += h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    s.y += h / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
    s.u += h / 6 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u);
    s.v += h / 6 * (k1.v + 2 * k2.v + 2 * k3.v + k4.v);
  }
  return {s.x, s.y};
}

}  // namespace hsubgrad::testing
