#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hsubgrad/solver.hpp"

namespace hsubgrad {

// Flat "key = value" experiment description; '#' starts a comment. Complex
// numbers are written "a+bi" (also "bi", "a").
//
//   name = two_busemann
//   model = poincare            # poincare | scaled | euclidean
//   kappa = 1.0                 # scaled only
//   oracle = two-busemann       # two-busemann | ball-hinge | distance | busemann
//   center = 0+0i               # ball-hinge centre (alias: anchor, base)
//   radius = 0.3
//   eta = 1+0i                  # busemann direction
//   schedule = harmonic:c=1.0
//   x0 = 0+0.9i
//   max_iters = 10000
//   record_every = 1
//   stop_grad_tol = 1e-12
//   seed = 0
//   output_dir = out
struct ExperimentConfig {
  std::string name = "experiment";
  SolveConfig solve;
  std::filesystem::path output_dir = ".";
};

// Throws ConfigError naming the offending key.
ExperimentConfig parse_experiment(std::string_view text);
ExperimentConfig load_experiment(const std::filesystem::path& path);

// Parses "a+bi", "a-bi", "bi", "-i", "a". Returns false on malformed input.
bool parse_complex(std::string_view text, Point& out);
std::string format_complex(Point p);

}  // namespace hsubgrad
