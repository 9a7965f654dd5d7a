#include "hsubgrad/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "hsubgrad/config.hpp"
#include "hsubgrad/error.hpp"
#include "hsubgrad/numfmt.hpp"
#include "hsubgrad/trace_io.hpp"

namespace hsubgrad {

namespace fs = std::filesystem;

namespace {

void write_outputs(const fs::path& dir, const std::string& stem, const RunTrace& trace) {
  fs::create_directories(dir);
  write_file_atomic(dir / (stem + ".trace.json"), trace_to_json(trace).dump(1) + "\n");
  write_file_atomic(dir / (stem + ".trace.csv"), trace_to_csv(trace));
  write_file_atomic(dir / (stem + ".summary.json"), summary_to_json(trace).dump(2) + "\n");
}

}  // namespace

int cmd_solve(const fs::path& config, const std::optional<fs::path>& out_dir,
              std::ostream& out, std::ostream& err) {
  ExperimentConfig exp;
  try {
    exp = load_experiment(config);
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  const RunTrace trace = run(exp.solve);
  const fs::path dir = out_dir ? *out_dir : exp.output_dir;
  write_outputs(dir, exp.name, trace);

  out << exp.name << ": " << to_string(trace.termination.kind) << " at k="
      << trace.termination.k << ", best value " << format_double(trace.summary.best_value);
  if (trace.summary.final_dist_to_solution) {
    out << ", final dist_to_S " << format_double(*trace.summary.final_dist_to_solution);
  }
  out << "\n";
  if (trace.termination.kind == TerminationKind::NumericalFailure) {
    err << "numerical failure: " << trace.termination.reason << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts,
               const std::optional<fs::path>& report_path, std::ostream& out,
               std::ostream& err) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    err << "unknown suite '" << suite << "'; expected one of:";
    for (const auto& n : names) err << " " << n;
    err << "\n";
    return kExitConfig;
  }
  if (opts.n == 0) {
    err << "--n must be at least 1\n";
    return kExitConfig;
  }
  const auto reports = run_suite(suite, opts);
  nlohmann::json checks = nlohmann::json::array();
  std::vector<std::string> failing;
  for (const auto& r : reports) {
    out << std::left << std::setw(46) << r.check << " n=" << r.n_samples
        << " violations=" << r.n_violations << " worst_margin="
        << (r.n_samples ? format_double(r.worst_margin) : "n/a")
        << " tol=" << format_double(r.tolerance) << "\n";
    if (!r.passed()) failing.push_back(r.check);
    checks.push_back(r.to_json());
  }
  if (report_path) {
    if (report_path->has_parent_path()) fs::create_directories(report_path->parent_path());
    const nlohmann::json doc = {{"suite", suite},
                                {"n", opts.n},
                                {"seed", opts.seed},
                                {"passed", failing.empty()},
                                {"checks", std::move(checks)}};
    write_file_atomic(*report_path, doc.dump(2) + "\n");
  }
  if (!failing.empty()) {
    err << "verification failed:";
    for (const auto& f : failing) err << " " << f;
    err << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

ReproduceOutcome reproduce_example(const ReproduceOptions& opts) {
  SolveConfig cfg;
  cfg.manifold = Manifold::poincare_disk();
  cfg.oracle.name = "two-busemann";
  cfg.schedule = StepSchedule::harmonic(1.0);
  cfg.x0 = opts.x0;
  cfg.max_iters = std::max<std::size_t>(1, opts.steps);
  cfg.record_every = 1;
  // Stop only on an exactly vanishing subgradient. With lambda_k = 1/(k+1)
  // the iterates periodically land within ~1e-13 of the axis, which the
  // default threshold would already count as a stop.
  cfg.stop_grad_tol = 0.0;

  ReproduceOutcome o;
  o.trace = run(cfg);
  const Manifold& m = cfg.manifold;
  const auto& recs = o.trace.records;

  for (const auto& r : recs) {
    o.worst_real_part = std::max(o.worst_real_part, std::abs(r.point.x));
    if (!o.first_below_1e3 && r.dist_to_solution && *r.dist_to_solution < 1e-3) {
      o.first_below_1e3 = r.k;
    }
  }
  o.on_axis = o.worst_real_part < 1e-10;

  o.worst_step_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
    const double d_k = m.distance(recs[i].point, {});
    const double d_next = m.distance(recs[i + 1].point, {});
    o.worst_step_excess =
        std::max(o.worst_step_excess, d_next - std::max(recs[i].lambda, d_k));
  }
  o.per_step_bound = recs.size() < 2 || o.worst_step_excess <= 1e-12;

  const std::size_t steps = o.trace.summary.steps;
  const std::size_t tail = std::max<std::size_t>(1, steps / 10);
  for (std::size_t k = steps > tail ? steps - tail : 0; k < steps; ++k) {
    o.tail_max_lambda = std::max(o.tail_max_lambda, cfg.schedule.step(k));
  }
  o.final_dist = recs.back().dist_to_solution.value_or(0.0);
  o.final_bound = o.final_dist <= o.tail_max_lambda || o.final_dist == 0.0;

  std::ostringstream rep;
  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  rep << "Subgradient method on f = B_beta + B_alpha (Poincare disk)\n"
      << "==========================================================\n"
      << "x0                 : " << format_complex(cfg.x0) << "\n"
      << "schedule           : " << cfg.schedule.spec() << "\n"
      << "steps requested    : " << cfg.max_iters << "\n"
      << "termination        : " << to_string(o.trace.termination.kind) << " at k="
      << o.trace.termination.k << "\n"
      << "final iterate      : " << format_complex(recs.back().point) << "\n"
      << "final d(x, S)      : " << format_double(o.final_dist) << "\n"
      << "first k, d < 1e-3  : "
      << (o.first_below_1e3 ? std::to_string(*o.first_below_1e3) : std::string("not reached"))
      << "\n\n"
      << "(i)   iterates on the y-axis, max |Re x^k| = " << format_double(o.worst_real_part)
      << " < 1e-10 : " << verdict(o.on_axis) << "\n"
      << "(ii)  d(x^{k+1},0) <= max(lambda_k, d(x^k,0)), worst excess = "
      << (recs.size() < 2 ? std::string("n/a") : format_double(o.worst_step_excess))
      << " : " << verdict(o.per_step_bound) << "\n"
      << "(iii) d(x^N, S) = " << format_double(o.final_dist)
      << " <= max lambda over last 10% = " << format_double(o.tail_max_lambda) << " : "
      << verdict(o.final_bound) << "\n";
  o.report = rep.str();

  if (opts.out_dir) {
    write_outputs(*opts.out_dir, "reproduce", o.trace);
    write_file_atomic(*opts.out_dir / "reproduce.report.txt", o.report);
  }
  return o;
}

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err) {
  const ReproduceOutcome o = reproduce_example(opts);
  out << o.report;
  if (!o.passed()) {
    err << "reproduction assertion failed\n";
    return kExitReproduction;
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemannian subgradient method on Poincare-disk models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "run an experiment config");
  solve->add_option("config", config_path, "experiment config file")->required();
  solve->add_option("--out", solve_out, "output directory (overrides output_dir)");

  std::string suite;
  SuiteOptions vopts;
  double tol = 0.0;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run an inequality verification suite");
  verify->add_option("suite", suite, "law-of-cosines | key-theorem | per-step | sublevel | "
                                     "gradcheck | subgradient | all")
      ->required();
  verify->add_option("--n", vopts.n, "samples per randomized check");
  verify->add_option("--seed", vopts.seed, "base seed");
  auto* tol_opt = verify->add_option("--tol", tol, "override every check's tolerance");
  verify->add_option("--report", report_path, "write the report JSON here");

  ReproduceOptions ropts;
  std::string x0_text;
  std::string repro_out;
  auto* repro = app.add_subcommand("reproduce", "rerun the two-Busemann disk example");
  repro->add_option("--steps", ropts.steps, "number of iterations");
  repro->add_option("--x0", x0_text, "starting point a+bi (default 0+0.9i)");
  repro->add_option("--out", repro_out, "directory for trace and report files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*solve) {
      std::optional<fs::path> dir;
      if (!solve_out.empty()) dir = solve_out;
      return cmd_solve(config_path, dir, out, err);
    }
    if (*verify) {
      if (tol_opt->count() > 0) vopts.tolerance = tol;
      std::optional<fs::path> rp;
      if (!report_path.empty()) rp = report_path;
      return cmd_verify(suite, vopts, rp, out, err);
    }
    if (*repro) {
      if (!x0_text.empty()) {
        if (!parse_complex(x0_text, ropts.x0) || ropts.x0.norm_sq() >= 1.0) {
          err << "--x0: expected a point a+bi of the open unit disk\n";
          return kExitConfig;
        }
      }
      if (!repro_out.empty()) ropts.out_dir = repro_out;
      return cmd_reproduce(ropts, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::InvalidArgument ||
        e.code() == ErrorCode::OutsideModel) {
      return kExitConfig;
    }
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace hsubgrad
