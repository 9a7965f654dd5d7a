// Python bindings. Points and tangent vectors cross the boundary as Python
// complex numbers; structured results cross as JSON text.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hsubgrad/cli.hpp"
#include "hsubgrad/config.hpp"
#include "hsubgrad/error.hpp"
#include "hsubgrad/oracles.hpp"
#include "hsubgrad/solver.hpp"
#include "hsubgrad/trace_io.hpp"
#include "hsubgrad/verify.hpp"

namespace py = pybind11;
using namespace hsubgrad;

namespace {

Manifold manifold_for(double kappa) {
  return kappa == 1.0 ? Manifold::poincare_disk() : Manifold::scaled_disk(kappa);
}

Tangent tangent_at(Point p, Complex v) { return {p, v.real(), v.imag()}; }

Complex vec(const Tangent& t) { return {t.vx, t.vy}; }

}  // namespace

PYBIND11_MODULE(_hsubgrad, m) {
  m.doc() = "Subgradient method on the Poincare disk";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "distance",
      [](Complex p, Complex q, double kappa) {
        const Manifold mf = manifold_for(kappa);
        return mf.distance(mf.point(p.real(), p.imag()), mf.point(q.real(), q.imag()));
      },
      py::arg("p"), py::arg("q"), py::arg("kappa") = 1.0);

  m.def(
      "exp",
      [](Complex p, Complex v, double kappa) {
        const Manifold mf = manifold_for(kappa);
        return mf.exp(tangent_at(mf.point(p.real(), p.imag()), v)).z();
      },
      py::arg("p"), py::arg("v"), py::arg("kappa") = 1.0);

  m.def(
      "log",
      [](Complex p, Complex q, double kappa) {
        const Manifold mf = manifold_for(kappa);
        return vec(mf.log(mf.point(p.real(), p.imag()), mf.point(q.real(), q.imag())));
      },
      py::arg("p"), py::arg("q"), py::arg("kappa") = 1.0);

  m.def(
      "norm",
      [](Complex p, Complex v, double kappa) {
        const Manifold mf = manifold_for(kappa);
        return mf.norm(tangent_at(mf.point(p.real(), p.imag()), v));
      },
      py::arg("p"), py::arg("v"), py::arg("kappa") = 1.0);

  m.def(
      "busemann_value", [](Complex eta, Complex x) { return busemann_value(eta, Point::from(x)); },
      py::arg("eta"), py::arg("x"));

  m.def(
      "busemann_gradient",
      [](Complex eta, Complex x) {
        return vec(busemann_gradient(eta, make_disk_point(x.real(), x.imag())));
      },
      py::arg("eta"), py::arg("x"));

  m.def("oracle_names", &oracle_names);
  m.def("suite_names", &suite_names);

  m.def(
      "_solve_text",
      [](const std::string& config_text) {
        const ExperimentConfig cfg = parse_experiment(config_text);
        RunTrace t;
        {
          py::gil_scoped_release release;
          t = run(cfg.solve);
        }
        return trace_to_json(t).dump();
      },
      py::arg("config_text"));

  m.def(
      "_run_suite",
      [](const std::string& name, std::size_t n, std::uint64_t seed, unsigned threads) {
        SuiteOptions o;
        o.n = n;
        o.seed = seed;
        o.threads = threads;
        std::vector<InequalityReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(name, o);
        }
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        return j.dump();
      },
      py::arg("name"), py::arg("n") = 10'000, py::arg("seed") = 7, py::arg("threads") = 0);

  m.def(
      "_reproduce",
      [](std::size_t steps, Complex x0) {
        ReproduceOptions o;
        o.steps = steps;
        o.x0 = Point::from(x0);
        ReproduceOutcome r;
        {
          py::gil_scoped_release release;
          r = reproduce_example(o);
        }
        nlohmann::json j;
        j["passed"] = r.passed();
        j["on_axis"] = r.on_axis;
        j["per_step_bound"] = r.per_step_bound;
        j["final_bound"] = r.final_bound;
        j["worst_real_part"] = r.worst_real_part;
        j["worst_step_excess"] = r.worst_step_excess;
        j["final_dist"] = r.final_dist;
        j["tail_max_lambda"] = r.tail_max_lambda;
        j["first_below_1e3"] =
            r.first_below_1e3 ? nlohmann::json(*r.first_below_1e3) : nlohmann::json(nullptr);
        j["summary"] = summary_to_json(r.trace);
        return j.dump();
      },
      py::arg("steps") = 10'000, py::arg("x0") = Complex(0.0, 0.9));
}
