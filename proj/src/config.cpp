#include "hsubgrad/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hsubgrad/error.hpp"
#include "hsubgrad/numfmt.hpp"

namespace hsubgrad {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view key, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "key '" + std::string(key) + "': " + why);
}

double number_for(std::string_view key, std::string_view value) {
  double v = 0.0;
  if (!parse_double(value, v)) bad(key, "expected a number, got '" + std::string(value) + "'");
  return v;
}

std::size_t count_for(std::string_view key, std::string_view value) {
  std::size_t v = 0;
  if (!parse_size(value, v)) bad(key, "expected a nonnegative integer, got '" + std::string(value) + "'");
  return v;
}

Point complex_for(std::string_view key, std::string_view value) {
  Point p;
  if (!parse_complex(value, p)) bad(key, "expected a complex number a+bi, got '" + std::string(value) + "'");
  return p;
}

bool imag_coefficient(std::string_view s, double& out) {
  if (s.empty() || s == "+") {
    out = 1.0;
    return true;
  }
  if (s == "-") {
    out = -1.0;
    return true;
  }
  return parse_double(s, out);
}

}  // namespace

bool parse_complex(std::string_view text, Point& out) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return false;
  if (s.back() != 'i') {
    out.y = 0.0;
    return parse_double(s, out.x);
  }
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    out.x = 0.0;
    return imag_coefficient(s, out.y);
  }
  return parse_double(std::string_view(s).substr(0, split), out.x) &&
         imag_coefficient(std::string_view(s).substr(split), out.y);
}

std::string format_complex(Point p) {
  std::string out = format_double(p.x);
  if (!(p.y < 0.0) && !std::signbit(p.y)) out += '+';
  out += format_double(p.y);
  out += 'i';
  return out;
}

ExperimentConfig parse_experiment(std::string_view text) {
  ExperimentConfig cfg;
  std::string model = "poincare";
  double kappa = 1.0;
  bool kappa_set = false;
  std::set<std::string> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (!seen.insert(key).second) bad(key, "given more than once");

    if (key == "name") {
      cfg.name = value;
    } else if (key == "model") {
      model = value;
    } else if (key == "kappa") {
      kappa = number_for(key, value);
      kappa_set = true;
    } else if (key == "oracle") {
      cfg.solve.oracle.name = value;
    } else if (key == "center" || key == "anchor" || key == "base") {
      cfg.solve.oracle.center = complex_for(key, value);
    } else if (key == "radius") {
      cfg.solve.oracle.radius = number_for(key, value);
    } else if (key == "eta") {
      cfg.solve.oracle.eta = complex_for(key, value);
    } else if (key == "schedule") {
      try {
        cfg.solve.schedule = StepSchedule::parse(value);
      } catch (const Error& e) {
        bad(key, e.what());
      }
    } else if (key == "x0") {
      cfg.solve.x0 = complex_for(key, value);
    } else if (key == "max_iters") {
      cfg.solve.max_iters = count_for(key, value);
    } else if (key == "record_every") {
      cfg.solve.record_every = count_for(key, value);
    } else if (key == "stop_grad_tol") {
      cfg.solve.stop_grad_tol = number_for(key, value);
    } else if (key == "seed") {
      cfg.solve.seed = count_for(key, value);
    } else if (key == "output_dir") {
      cfg.output_dir = std::string(value);
    } else {
      bad(key, "unknown key");
    }
  }

  try {
    if (model == "poincare") {
      cfg.solve.manifold = Manifold::poincare_disk();
    } else if (model == "scaled") {
      cfg.solve.manifold = Manifold::scaled_disk(kappa);
    } else if (model == "euclidean") {
      cfg.solve.manifold = Manifold::euclidean_plane();
    } else {
      bad("model", "unknown model '" + model + "'");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    bad("kappa", e.what());
  }
  if (kappa_set && model != "scaled") bad("kappa", "only valid with model = scaled");

  bool known_oracle = false;
  for (const auto& n : oracle_names()) known_oracle = known_oracle || n == cfg.solve.oracle.name;
  if (!known_oracle) bad("oracle", "unknown oracle '" + cfg.solve.oracle.name + "'");
  try {
    make_oracle(cfg.solve.oracle);
  } catch (const Error& e) {
    bad("oracle", e.what());
  }

  if (cfg.solve.max_iters < 1) bad("max_iters", "must be >= 1");
  if (cfg.solve.record_every < 1) bad("record_every", "must be >= 1");
  if (!(cfg.solve.stop_grad_tol >= 0.0)) bad("stop_grad_tol", "must be >= 0");
  if (!cfg.solve.manifold.contains(cfg.solve.x0)) {
    bad("x0", "not a point of the " + cfg.solve.manifold.describe() + " model");
  }
  return cfg;
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment(buf.str());
}

}  // namespace hsubgrad
