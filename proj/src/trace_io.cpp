#include "hsubgrad/trace_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "hsubgrad/error.hpp"
#include "hsubgrad/numfmt.hpp"

namespace hsubgrad {

using nlohmann::json;

namespace {

json point_json(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

// nlohmann writes NaN as null.
double number_or_nan(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

TerminationKind termination_from(const std::string& s) {
  if (s == "SubgradientZero") return TerminationKind::SubgradientZero;
  if (s == "MaxIters") return TerminationKind::MaxIters;
  if (s == "NumericalFailure") return TerminationKind::NumericalFailure;
  throw Error(ErrorCode::ConfigError, "unknown termination kind '" + s + "'");
}

SolutionSet solutions_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const Point center = point_from(j.at("center"));
  const double radius = j.at("radius").get<double>();
  if (kind == to_string(SolutionKind::SinglePoint)) return SolutionSet::single_point(center);
  if (kind == to_string(SolutionKind::XAxisDiameter)) return SolutionSet::x_axis();
  if (kind == to_string(SolutionKind::ClosedBall)) return SolutionSet::closed_ball(center, radius);
  if (kind == to_string(SolutionKind::Unknown)) return SolutionSet::unknown();
  throw Error(ErrorCode::ConfigError, "unknown solution kind '" + kind + "'");
}

}  // namespace

json config_to_json(const SolveConfig& cfg) {
  return {
      {"manifold", {{"model", to_string(cfg.manifold.model())},
                    {"kappa", cfg.manifold.curvature_bound()}}},
      {"oracle", {{"name", cfg.oracle.name},
                  {"center", point_json(cfg.oracle.center)},
                  {"radius", cfg.oracle.radius},
                  {"eta", point_json(cfg.oracle.eta)}}},
      {"schedule", cfg.schedule.spec()},
      {"x0", point_json(cfg.x0)},
      {"max_iters", cfg.max_iters},
      {"stop_grad_tol", cfg.stop_grad_tol},
      {"record_every", cfg.record_every},
      {"seed", cfg.seed},
  };
}

SolveConfig config_from_json(const json& j) {
  SolveConfig cfg;
  const auto& man = j.at("manifold");
  const auto model = man.at("model").get<std::string>();
  if (model == "poincare") {
    cfg.manifold = Manifold::poincare_disk();
  } else if (model == "scaled") {
    cfg.manifold = Manifold::scaled_disk(man.at("kappa").get<double>());
  } else if (model == "euclidean") {
    cfg.manifold = Manifold::euclidean_plane();
  } else {
    throw Error(ErrorCode::ConfigError, "unknown model '" + model + "'");
  }
  const auto& o = j.at("oracle");
  cfg.oracle.name = o.at("name").get<std::string>();
  cfg.oracle.center = point_from(o.at("center"));
  cfg.oracle.radius = o.at("radius").get<double>();
  cfg.oracle.eta = point_from(o.at("eta"));
  cfg.schedule = StepSchedule::parse(j.at("schedule").get<std::string>());
  cfg.x0 = point_from(j.at("x0"));
  cfg.max_iters = j.at("max_iters").get<std::size_t>();
  cfg.stop_grad_tol = j.at("stop_grad_tol").get<double>();
  cfg.record_every = j.at("record_every").get<std::size_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

json summary_to_json(const RunTrace& trace) {
  const RunSummary& s = trace.summary;
  return {
      {"oracle", trace.oracle_name},
      {"termination", to_string(trace.termination.kind)},
      {"termination_k", trace.termination.k},
      {"termination_reason", trace.termination.reason},
      {"best_value", s.best_value},
      {"best_gap", optional_json(s.best_gap)},
      {"final_dist_to_S", optional_json(s.final_dist_to_solution)},
      {"steps", s.steps},
      {"sum_lambda", s.sum_lambda},
      {"sum_lambda_sq", s.sum_lambda_sq},
      {"drift_events", s.drift_events},
  };
}

json trace_to_json(const RunTrace& trace) {
  json records = json::array();
  for (const auto& r : trace.records) {
    records.push_back({{"k", r.k},
                       {"x", r.point.x},
                       {"y", r.point.y},
                       {"f", r.f_value},
                       {"grad_norm", r.grad_norm},
                       {"lambda", r.lambda},
                       {"dist_to_S", optional_json(r.dist_to_solution)},
                       {"drift", r.drift}});
  }
  return {
      {"config", config_to_json(trace.config)},
      {"oracle", trace.oracle_name},
      {"f_star", optional_json(trace.f_star)},
      {"solutions", {{"kind", to_string(trace.solutions.kind())},
                     {"center", point_json(trace.solutions.center())},
                     {"radius", trace.solutions.radius()}}},
      {"termination", {{"kind", to_string(trace.termination.kind)},
                       {"k", trace.termination.k},
                       {"reason", trace.termination.reason}}},
      {"records", std::move(records)},
      {"summary", summary_to_json(trace)},
  };
}

RunTrace trace_from_json(const json& j) {
  RunTrace t;
  t.config = config_from_json(j.at("config"));
  t.oracle_name = j.at("oracle").get<std::string>();
  t.f_star = optional_from(j.at("f_star"));
  t.solutions = solutions_from(j.at("solutions"));
  const auto& term = j.at("termination");
  t.termination.kind = termination_from(term.at("kind").get<std::string>());
  t.termination.k = term.at("k").get<std::size_t>();
  t.termination.reason = term.at("reason").get<std::string>();
  for (const auto& r : j.at("records")) {
    IterationRecord rec;
    rec.k = r.at("k").get<std::size_t>();
    rec.point = {r.at("x").get<double>(), r.at("y").get<double>()};
    rec.f_value = number_or_nan(r.at("f"));
    rec.grad_norm = number_or_nan(r.at("grad_norm"));
    rec.lambda = r.at("lambda").get<double>();
    rec.dist_to_solution = optional_from(r.at("dist_to_S"));
    rec.drift = r.at("drift").get<bool>();
    t.records.push_back(rec);
  }
  t.summary = summarize(t);
  return t;
}

std::string trace_to_csv(const RunTrace& trace) {
  std::string out = kTraceCsvHeader;
  out += '\n';
  for (const auto& r : trace.records) {
    out += std::to_string(r.k);
    for (double v : {r.point.x, r.point.y, r.f_value, r.grad_norm, r.lambda}) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    if (r.dist_to_solution) out += format_double(*r.dist_to_solution);
    out += r.drift ? ",1\n" : ",0\n";
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hsubgrad
