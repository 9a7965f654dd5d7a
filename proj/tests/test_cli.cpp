#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsubgrad/cli.hpp"
#include "hsubgrad/config.hpp"
#include "hsubgrad/error.hpp"
#include "hsubgrad/trace_io.hpp"

using namespace hsubgrad;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hsubgrad_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int invoke(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "hsubgrad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return rc;
}

ErrorCode config_error_code(const std::string& text, std::string* message = nullptr) {
  try {
    parse_experiment(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Complex, ParseAndFormat) {
  Point p;
  ASSERT_TRUE(parse_complex("0+0.9i", p));
  EXPECT_EQ(p, (Point{0.0, 0.9}));
  ASSERT_TRUE(parse_complex("-0.25-0.5i", p));
  EXPECT_EQ(p, (Point{-0.25, -0.5}));
  ASSERT_TRUE(parse_complex("0.3i", p));
  EXPECT_EQ(p, (Point{0.0, 0.3}));
  ASSERT_TRUE(parse_complex("-i", p));
  EXPECT_EQ(p, (Point{0.0, -1.0}));
  ASSERT_TRUE(parse_complex("0.5", p));
  EXPECT_EQ(p, (Point{0.5, 0.0}));
  ASSERT_TRUE(parse_complex("1e-3+2e-3i", p));
  EXPECT_EQ(p, (Point{1e-3, 2e-3}));
  EXPECT_FALSE(parse_complex("", p));
  EXPECT_FALSE(parse_complex("abc", p));
  EXPECT_FALSE(parse_complex("1+2", p));
  for (const Point q : {Point{0.1, -0.2}, Point{0, 0.9}, Point{-1e-17, 3.0}}) {
    Point back;
    ASSERT_TRUE(parse_complex(format_complex(q), back));
    EXPECT_EQ(back, q);
  }
}

TEST(Config, ParsesEveryKey) {
  const ExperimentConfig e = parse_experiment(R"(
# comment line
name = demo
model = scaled
kappa = 2.5
oracle = ball-hinge   # trailing comment
center = 0.1-0.2i
radius = 0.4
schedule = "powerlaw:c=2,alpha=0.8"
x0 = 0+0.5i
max_iters = 123
record_every = 4
stop_grad_tol = 1e-9
seed = 99
output_dir = results
)");
  EXPECT_EQ(e.name, "demo");
  EXPECT_EQ(e.solve.manifold.model(), Model::ScaledDisk);
  EXPECT_EQ(e.solve.manifold.curvature_bound(), 2.5);
  EXPECT_EQ(e.solve.oracle.name, "ball-hinge");
  EXPECT_EQ(e.solve.oracle.center, (Point{0.1, -0.2}));
  EXPECT_EQ(e.solve.oracle.radius, 0.4);
  EXPECT_EQ(e.solve.schedule.spec(), StepSchedule::power_law(2, 0.8).spec());
  EXPECT_EQ(e.solve.x0, (Point{0.0, 0.5}));
  EXPECT_EQ(e.solve.max_iters, 123u);
  EXPECT_EQ(e.solve.record_every, 4u);
  EXPECT_EQ(e.solve.stop_grad_tol, 1e-9);
  EXPECT_EQ(e.solve.seed, 99u);
  EXPECT_EQ(e.output_dir, fs::path("results"));
}

TEST(Config, ErrorsNameTheKey) {
  std::string msg;
  EXPECT_EQ(config_error_code("bogus = 1\n", &msg), ErrorCode::ConfigError);
  EXPECT_NE(msg.find("bogus"), std::string::npos);
  EXPECT_EQ(config_error_code("schedule = harmonic:c=-1\n", &msg), ErrorCode::ConfigError);
  EXPECT_NE(msg.find("schedule"), std::string::npos);
  EXPECT_EQ(config_error_code("x0 = 2+0i\n", &msg), ErrorCode::ConfigError);
  EXPECT_NE(msg.find("x0"), std::string::npos);
  EXPECT_EQ(config_error_code("max_iters = -4\n", &msg), ErrorCode::ConfigError);
  EXPECT_NE(msg.find("max_iters"), std::string::npos);
  EXPECT_EQ(config_error_code("seed = 1\nseed = 2\n", &msg), ErrorCode::ConfigError);
  EXPECT_NE(msg.find("seed"), std::string::npos);
  EXPECT_EQ(config_error_code("oracle = nope\n"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("model = sphere\n"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("just text\n"), ErrorCode::ConfigError);
}

TEST(Config, BundledFilesLoad) {
  for (const char* name : {"two_busemann.cfg", "ball_hinge.cfg"}) {
    EXPECT_NO_THROW(load_experiment(fs::path(HSUBGRAD_CONFIG_DIR) / name)) << name;
  }
  EXPECT_THROW(load_experiment("/nonexistent/file.cfg"), Error);
}

TEST(Solve, BundledExperimentsWriteTheirFiles) {
  const fs::path dir = fresh_dir("solve");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(fs::path(HSUBGRAD_CONFIG_DIR) / "two_busemann.cfg", dir, out, err), 0);
  EXPECT_EQ(cmd_solve(fs::path(HSUBGRAD_CONFIG_DIR) / "ball_hinge.cfg", dir, out, err), 0);
  for (const char* f : {"two_busemann.trace.json", "two_busemann.trace.csv",
                        "two_busemann.summary.json", "ball_hinge.summary.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const auto two = nlohmann::json::parse(slurp(dir / "two_busemann.summary.json"));
  EXPECT_EQ(two.at("termination"), "MaxIters");
  const auto hinge = nlohmann::json::parse(slurp(dir / "ball_hinge.summary.json"));
  EXPECT_EQ(hinge.at("termination"), "SubgradientZero");
  EXPECT_GT(hinge.at("termination_k").get<int>(), 0);
  for (const char* key : {"best_gap", "final_dist_to_S", "sum_lambda", "sum_lambda_sq"}) {
    EXPECT_TRUE(hinge.contains(key)) << key;
  }

  const std::string csv = slurp(dir / "two_busemann.trace.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kTraceCsvHeader);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10'002);
  for (const auto& entry : fs::directory_iterator(dir)) {
    EXPECT_NE(entry.path().extension(), ".tmp");
  }
}

TEST(Solve, ExitCodes) {
  const fs::path dir = fresh_dir("exit");
  std::ostringstream out, err;
  {
    std::ofstream(dir / "bad.cfg") << "name = bad\nschedule = harmonic:c=-1\n";
  }
  EXPECT_EQ(cmd_solve(dir / "bad.cfg", dir, out, err), kExitConfig);
  EXPECT_NE(err.str().find("schedule"), std::string::npos);
  EXPECT_EQ(cmd_solve(dir / "missing.cfg", dir, out, err), kExitConfig);
  {
    // Far from the boundary the Busemann gradient pushes the iterate into the
    // clamp region; a step table of huge steps eventually overflows.
    std::ofstream(dir / "drift.cfg") << "name = drift\noracle = busemann\neta = -1+0i\n"
                                        "schedule = table:1e300\nx0 = 0\nmax_iters = 50\n";
  }
  const int rc = cmd_solve(dir / "drift.cfg", dir, out, err);
  EXPECT_TRUE(rc == kExitOk || rc == kExitNumerical) << rc;
}

TEST(TraceJson, RoundTripReproducesSummaryBitExactly) {
  SolveConfig cfg;
  cfg.oracle.name = "two-busemann";
  cfg.x0 = {0.0, 0.9};
  cfg.schedule = StepSchedule::sqrt_harmonic(0.5);
  cfg.max_iters = 500;
  cfg.record_every = 3;
  const RunTrace t = run(cfg);
  const std::string text = trace_to_json(t).dump();
  const RunTrace back = trace_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(summary_to_json(back).dump(), summary_to_json(t).dump());
  EXPECT_EQ(back.summary.best_value, t.summary.best_value);
  EXPECT_EQ(back.summary.sum_lambda, t.summary.sum_lambda);
  EXPECT_EQ(back.summary.sum_lambda_sq, t.summary.sum_lambda_sq);
  EXPECT_EQ(back.records.size(), t.records.size());
  EXPECT_EQ(back.records.back().point, t.records.back().point);
  EXPECT_EQ(trace_to_json(back).dump(), text);
}

TEST(TraceJson, ConfigRoundTrip) {
  SolveConfig cfg;
  cfg.manifold = Manifold::scaled_disk(1.5);
  cfg.oracle.name = "busemann";
  cfg.oracle.eta = {0.6, 0.8};
  cfg.oracle.center = {0.1, 0.1};
  cfg.schedule = StepSchedule::table({0.3, 0.2});
  cfg.seed = 5;
  const SolveConfig back = config_from_json(config_to_json(cfg));
  EXPECT_EQ(config_to_json(back).dump(), config_to_json(cfg).dump());
}

TEST(Verify, ExitCodes) {
  std::string text;
  EXPECT_EQ(invoke({"verify", "law-of-cosines", "--n", "2000", "--seed", "7"}, &text), 0);
  EXPECT_NE(text.find("law-of-cosines-equality-k1"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "no-such-suite"}), kExitConfig);
  EXPECT_EQ(invoke({"verify", "gradcheck", "--n", "0"}), kExitConfig);
  // A negative tolerance turns exact zeros into violations.
  EXPECT_EQ(invoke({"verify", "gradcheck", "--n", "50", "--tol", "-1"}, &text), kExitViolation);
  EXPECT_NE(text.find("busemann-unit-norm"), std::string::npos);
}

TEST(Verify, WritesReport) {
  const fs::path dir = fresh_dir("verify");
  EXPECT_EQ(invoke({"verify", "sublevel", "--report", (dir / "r.json").string()}), 0);
  const auto j = nlohmann::json::parse(slurp(dir / "r.json"));
  ASSERT_TRUE(j.contains("checks"));
  EXPECT_FALSE(j.at("checks").empty());
}

TEST(Reproduce, DefaultRunPasses) {
  const fs::path dir = fresh_dir("reproduce");
  ReproduceOptions o;
  o.out_dir = dir;
  const ReproduceOutcome r = reproduce_example(o);
  EXPECT_TRUE(r.on_axis);
  EXPECT_TRUE(r.per_step_bound);
  EXPECT_TRUE(r.final_bound);
  ASSERT_TRUE(r.first_below_1e3.has_value());
  EXPECT_LT(*r.first_below_1e3, 10'000u);
  EXPECT_TRUE(fs::exists(dir / "reproduce.report.txt"));
  std::string text;
  EXPECT_EQ(invoke({"reproduce", "--out", dir.string()}, &text), 0);
}

TEST(Reproduce, ShortRunKeepsStructuralBounds) {
  ReproduceOptions o;
  o.steps = 10;
  const ReproduceOutcome r = reproduce_example(o);
  EXPECT_TRUE(r.on_axis);
  EXPECT_TRUE(r.per_step_bound);
}

TEST(Reproduce, StartingOnTheSolutionSetStopsImmediately) {
  ReproduceOptions o;
  o.x0 = {0.0, 0.0};
  const ReproduceOutcome r = reproduce_example(o);
  EXPECT_EQ(r.trace.termination.kind, TerminationKind::SubgradientZero);
  EXPECT_EQ(r.trace.termination.k, 0u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(invoke({"reproduce", "--x0", "0.0+0.0i"}), 0);
  EXPECT_EQ(invoke({"reproduce", "--x0", "garbage"}), kExitConfig);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}), kExitConfig);
  EXPECT_EQ(invoke({"frobnicate"}), kExitConfig);
  EXPECT_EQ(invoke({"--help"}), 0);
}
