#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fho/app/commands.hpp"
#include "fho/app/scenario.hpp"
#include "fho/app/verify.hpp"
#include "fho/canonical.hpp"
#include "fho/classical.hpp"
#include "fho/errors.hpp"
#include "fho/forcing.hpp"
#include "fho/hermite.hpp"
#include "fho/schrodinger.hpp"
#include "fho/transitions.hpp"

namespace py = pybind11;
using namespace fho;

namespace {

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

py::array_t<Complex> to_array(const WaveFunction& psi) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(psi.size()));
  auto view = out.mutable_unchecked<1>();
  for (std::size_t j = 0; j < psi.size(); ++j) view(static_cast<py::ssize_t>(j)) = psi[j];
  return out;
}

WaveFunction from_array(const GridSpec& grid, py::array_t<Complex, py::array::c_style | py::array::forcecast> values) {
  if (values.ndim() != 1 || static_cast<std::size_t>(values.shape(0)) != grid.points) {
    throw DomainError("wavefunction: values must be a 1-D array of grid.points entries");
  }
  return WaveFunction(grid, std::vector<Complex>(values.data(), values.data() + values.shape(0)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Forced harmonic oscillator: propagators, canonical frames, transition probabilities";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<BoundaryError>(m, "BoundaryError", PyExc_RuntimeError);
  py::register_exception<app::ConfigError>(m, "ConfigError", PyExc_ValueError);
  (void)domain_error;

  py::class_<OscillatorParams>(m, "OscillatorParams")
      .def(py::init<double, double>(), py::arg("mass") = 1.0, py::arg("omega") = 1.0)
      .def_readwrite("mass", &OscillatorParams::mass)
      .def_readwrite("omega", &OscillatorParams::omega)
      .def("validate", &OscillatorParams::validate)
      .def("__repr__", [](const OscillatorParams& p) {
        return "OscillatorParams(mass=" + std::to_string(p.mass) + ", omega=" + std::to_string(p.omega) + ")";
      });

  py::class_<PhaseState>(m, "PhaseState")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("p") = 0.0)
      .def_readwrite("x", &PhaseState::x)
      .def_readwrite("p", &PhaseState::p)
      .def("__iter__", [](const PhaseState& z) { return py::iter(py::make_tuple(z.x, z.p)); })
      .def("__repr__", [](const PhaseState& z) {
        return "PhaseState(x=" + std::to_string(z.x) + ", p=" + std::to_string(z.p) + ")";
      });

  py::class_<ForcingSpec>(m, "ForcingSpec")
      .def_static("zero", &ForcingSpec::zero)
      .def_static("constant", &ForcingSpec::constant, py::arg("K"))
      .def_static("sinusoid", &ForcingSpec::sinusoid, py::arg("A"), py::arg("Omega"), py::arg("phase") = 0.0)
      .def_static("pulse", &ForcingSpec::pulse, py::arg("K"), py::arg("t_on"), py::arg("t_off"))
      .def_static("tabulated", &ForcingSpec::tabulated, py::arg("samples"))
      .def_static("from_json", [](const std::string& text) { return parse_json(text).get<ForcingSpec>(); })
      .def("to_json", [](const ForcingSpec& s) { return nlohmann::json(s).dump(); })
      .def("__call__", &ForcingSpec::operator(), py::arg("t"))
      .def("breakpoints", &ForcingSpec::breakpoints, py::arg("t0"), py::arg("t1"));

  m.def("abs_integral", &abs_integral, py::arg("spec"), py::arg("t"), py::arg("tol") = 1e-10);

  m.def("propagator", &propagator, py::arg("params"), py::arg("t"));
  m.def("generator", &generator, py::arg("params"));
  m.def("quadratic_form", &quadratic_form, py::arg("params"));
  m.def("evolve", &evolve, py::arg("params"), py::arg("z0"), py::arg("spec"), py::arg("t"),
        py::arg("tol") = 1e-10);
  m.def("nonhomogeneous", &nonhomogeneous, py::arg("params"), py::arg("spec"), py::arg("t"),
        py::arg("tol") = 1e-10);
  m.def("quadratic_invariant", &quadratic_invariant, py::arg("params"), py::arg("z"));
  m.def("laboratory_ellipse", &laboratory_ellipse, py::arg("params"), py::arg("K"), py::arg("t"));

  py::class_<FrameSample>(m, "FrameSample")
      .def_readonly("t", &FrameSample::t)
      .def_readonly("x_nh", &FrameSample::x_nh)
      .def_readonly("xdot_nh", &FrameSample::xdot_nh)
      .def_readonly("gauge", &FrameSample::gauge)
      .def("p_nh", &FrameSample::p_nh, py::arg("mass"));

  py::class_<CanonicalFrame>(m, "CanonicalFrame")
      .def_static("build", &CanonicalFrame::build, py::arg("params"), py::arg("spec"), py::arg("t_max"),
                  py::arg("grid_points") = 257, py::arg("tol") = 1e-12)
      .def_property_readonly("params", &CanonicalFrame::params)
      .def_property_readonly("t_max", &CanonicalFrame::t_max)
      .def("at", &CanonicalFrame::at, py::arg("t"))
      .def("interpolate", &CanonicalFrame::interpolate, py::arg("t"));

  m.def("theta", &theta, py::arg("frame"), py::arg("x"), py::arg("t"));
  m.def("theta_prime", &theta_prime, py::arg("frame"), py::arg("xi"), py::arg("t"));
  m.def("f1", &f1, py::arg("frame"), py::arg("x"), py::arg("eta"), py::arg("t"));
  m.def("f2", &f2, py::arg("frame"), py::arg("xi"), py::arg("p"), py::arg("t"));
  m.def("to_moving", &to_moving, py::arg("frame"), py::arg("z_lab"), py::arg("t"));
  m.def("to_lab", &to_lab, py::arg("frame"), py::arg("z_moving"), py::arg("t"));

  m.def("hermite_poly", &hermite_poly, py::arg("n"), py::arg("x"));
  m.def("generating_function_partial", &generating_function_partial, py::arg("x"), py::arg("u"), py::arg("N"));
  m.def("gaussian_integral", &gaussian_integral, py::arg("z"));
  m.def("eigenstate", &eigenstate, py::arg("params"), py::arg("n"), py::arg("x"));
  m.def("eigen_energy", &eigen_energy, py::arg("params"), py::arg("n"));
  m.def("gauss_hermite_rule", [](int order) {
    const auto& r = gauss_hermite_rule(order);
    return py::make_tuple(r.nodes, r.weights);
  }, py::arg("order"));

  py::class_<DisplacementParams>(m, "DisplacementParams")
      .def(py::init<double, double>(), py::arg("a") = 0.0, py::arg("b") = 0.0)
      .def_readwrite("a", &DisplacementParams::a)
      .def_readwrite("b", &DisplacementParams::b)
      .def_property_readonly("lam", &DisplacementParams::lambda)
      .def_static("from_frame", &DisplacementParams::from_frame, py::arg("frame"), py::arg("t"));

  py::class_<TransitionRow>(m, "TransitionRow")
      .def_readonly("n", &TransitionRow::n)
      .def_readonly("t", &TransitionRow::t)
      .def_readonly("lam", &TransitionRow::lambda)
      .def_readonly("probabilities", &TransitionRow::probabilities)
      .def_readonly("truncation_m", &TransitionRow::truncation_m)
      .def_readonly("tail_bound", &TransitionRow::tail_bound)
      .def("to_json", [](const TransitionRow& r) { return nlohmann::json(r).dump(); });

  m.def("overlap_amplitude", &overlap_amplitude, py::arg("n"), py::arg("m"), py::arg("d"));
  m.def("overlap_quadrature_oracle", [](int n, int mm, DisplacementParams d, int order) {
    const auto r = overlap_quadrature_oracle(n, mm, d, order);
    return py::make_tuple(r.value, r.accuracy_warning);
  }, py::arg("n"), py::arg("m"), py::arg("d"), py::arg("order"));
  m.def("transition_probability", py::overload_cast<int, int, DisplacementParams>(&transition_probability),
        py::arg("n"), py::arg("m"), py::arg("d"));
  m.def("transition_probability",
        py::overload_cast<int, int, const CanonicalFrame&, double>(&transition_probability),
        py::arg("n"), py::arg("m"), py::arg("frame"), py::arg("t"));
  m.def("probability_row", py::overload_cast<int, DisplacementParams, double>(&probability_row),
        py::arg("n"), py::arg("d"), py::arg("tail_tol") = 1e-12);
  m.def("probability_row", py::overload_cast<int, const CanonicalFrame&, double, double>(&probability_row),
        py::arg("n"), py::arg("frame"), py::arg("t"), py::arg("tail_tol") = 1e-12);
  m.def("ground_state_survival", py::overload_cast<DisplacementParams>(&ground_state_survival), py::arg("d"));
  m.def("ground_state_survival", py::overload_cast<const CanonicalFrame&, double>(&ground_state_survival),
        py::arg("frame"), py::arg("t"));

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](double x_min, double x_max, std::size_t points, double dt) {
             GridSpec g{x_min, x_max, points, dt};
             g.validate();
             return g;
           }),
           py::arg("x_min") = -12.0, py::arg("x_max") = 12.0, py::arg("points") = 1024, py::arg("dt") = 1e-3)
      .def_readonly("x_min", &GridSpec::x_min)
      .def_readonly("x_max", &GridSpec::x_max)
      .def_readonly("points", &GridSpec::points)
      .def_readonly("dt", &GridSpec::dt)
      .def_property_readonly("dx", &GridSpec::dx)
      .def("positions", [](const GridSpec& g) {
        std::vector<double> xs(g.points);
        for (std::size_t j = 0; j < g.points; ++j) xs[j] = g.x(j);
        return xs;
      })
      .def_static("default_for", &GridSpec::default_for, py::arg("params"));

  py::class_<WaveFunction>(m, "WaveFunction")
      .def(py::init(&from_array), py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &WaveFunction::grid)
      .def_property_readonly("values", &to_array)
      .def("norm", &WaveFunction::norm)
      .def("normalized", &WaveFunction::normalized);

  m.def("eigenstate_wave", &eigenstate_wave, py::arg("params"), py::arg("grid"), py::arg("n"));
  m.def("momentum_representation", &momentum_representation, py::arg("psi"));
  m.def("evolve_lab", [](const OscillatorParams& p, const ForcingSpec& s, const WaveFunction& psi, double t) {
    py::gil_scoped_release release;
    return evolve_lab(p, s, psi, t);
  }, py::arg("params"), py::arg("spec"), py::arg("psi0"), py::arg("t_final"));
  m.def("evolve_moving", [](const OscillatorParams& p, const WaveFunction& phi, double t) {
    py::gil_scoped_release release;
    return evolve_moving(p, phi, t);
  }, py::arg("params"), py::arg("phi0"), py::arg("t_final"));
  m.def("apply_uf1", &apply_uf1, py::arg("frame"), py::arg("phi"), py::arg("t"));
  m.def("apply_uf2", &apply_uf2, py::arg("frame"), py::arg("psi"), py::arg("t"));
  m.def("overlap", &overlap, py::arg("psi1"), py::arg("psi2"));
  m.def("phase_aligned_distance", &phase_aligned_distance, py::arg("psi1"), py::arg("psi2"));

  m.def("parse_scenario", [](const std::string& text) {
    return nlohmann::json(app::parse_scenario(parse_json(text))).dump();
  }, py::arg("scenario_json"), "Validates a scenario and returns it with defaults filled in.");
  m.def("run_command", [](const std::string& command, const std::string& scenario_json,
                          const std::filesystem::path& out, double tol, const std::string& suite) {
    const auto scenario = app::parse_scenario(parse_json(scenario_json));
    app::RunOptions options;
    options.tol = tol;
    options.suite = app::parse_suite(suite);
    const auto cmd = app::parse_command(command);
    app::RunResult r;
    {
      py::gil_scoped_release release;
      r = app::run_command(cmd, scenario, out, options);
    }
    return py::make_tuple(r.exit_code, r.message);
  }, py::arg("command"), py::arg("scenario_json"), py::arg("out"), py::arg("tol") = 1e-12,
     py::arg("suite") = "all");
  m.def("run_verification", [](const std::string& scenario_json, const std::string& suite, double tol) {
    const auto scenario = app::parse_scenario(parse_json(scenario_json));
    app::VerifyReport report;
    {
      py::gil_scoped_release release;
      report = app::run_verification(scenario, app::parse_suite(suite), tol);
    }
    return nlohmann::json(report).dump();
  }, py::arg("scenario_json") = "{}", py::arg("suite") = "all", py::arg("tol") = 1e-12);
}
