#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rfun/analysis.hpp"
#include "rfun/io.hpp"
#include "rfun/quantum.hpp"
#include "rfun/rfunc.hpp"

namespace py = pybind11;
using namespace rfun;

namespace {

RPoint point(int m, double lambda) { return RPoint(Dimension(m), lambda); }
Delta delta(int m, double d) { return Delta(Dimension(m), d); }

}  // namespace

PYBIND11_MODULE(_rfun, mod) {
  mod.doc() = "R-function analysis, convex envelope co(R) and EOF bounds";

  py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
  py::register_exception<StateFormatError>(mod, "StateFormatError", PyExc_ValueError);

  py::enum_<LogBase>(mod, "LogBase")
      .value("two", LogBase::two)
      .value("natural", LogBase::natural);

  const auto two = py::arg("base") = LogBase::two;

  mod.def("binary_entropy", &binary_entropy, py::arg("x"), two);
  mod.def("gamma_value", [](int m, double l) { return gamma_value(point(m, l)); },
          py::arg("m"), py::arg("lam"));
  mod.def("gamma_first", [](int m, double l) { return gamma_first(point(m, l)); },
          py::arg("m"), py::arg("lam"));
  mod.def("gamma_second", [](int m, double l) { return gamma_second(point(m, l)); },
          py::arg("m"), py::arg("lam"));
  mod.def("r_value", [](int m, double l, LogBase b) { return r_value(point(m, l), b); },
          py::arg("m"), py::arg("lam"), two);
  mod.def("r_first", [](int m, double l, LogBase b) { return r_first(point(m, l), b); },
          py::arg("m"), py::arg("lam"), two);
  mod.def("r_second", [](int m, double l) { return r_second(point(m, l)); }, py::arg("m"),
          py::arg("lam"));
  mod.def("g_value", [](int m, double l) { return g_value(point(m, l)); }, py::arg("m"),
          py::arg("lam"));
  mod.def("f_value", [](int m, double l) { return f_value(point(m, l)); }, py::arg("m"),
          py::arg("lam"));
  mod.def("c_value", [](int m, double d) { return c_value(delta(m, d)); }, py::arg("m"),
          py::arg("delta"));
  mod.def("a_value", [](int m, double d) { return a_value(delta(m, d)); }, py::arg("m"),
          py::arg("delta"));
  mod.def("b_value", [](int m, double d) { return b_value(delta(m, d)); }, py::arg("m"),
          py::arg("delta"));
  mod.def("big_f_value", [](int m, double d) { return big_f_value(delta(m, d)); },
          py::arg("m"), py::arg("delta"));

  py::class_<InflectionResult>(mod, "InflectionResult")
      .def_readonly("lambda0", &InflectionResult::lambda0)
      .def_readonly("bracket", &InflectionResult::bracket)
      .def_readonly("iterations", &InflectionResult::iterations);
  mod.def("find_inflection", [](int m, double t) { return find_inflection(Dimension(m), t); },
          py::arg("m"), py::arg("tol") = 1e-12);

  py::class_<HullDescription>(mod, "HullDescription")
      .def_readonly("lambda_star", &HullDescription::lambda_star)
      .def_readonly("slope", &HullDescription::slope)
      .def_readonly("value_at_star", &HullDescription::value_at_star)
      .def_readonly("degenerate", &HullDescription::degenerate);
  mod.def("find_tangent", [](int m, double t) { return find_tangent(Dimension(m), t); },
          py::arg("m"), py::arg("tol") = 1e-13);

  py::class_<ConvexEnvelope>(mod, "ConvexEnvelope")
      .def(py::init([](int m) { return ConvexEnvelope(Dimension(m)); }), py::arg("m"))
      .def_property_readonly("description", &ConvexEnvelope::description)
      .def("__call__", &ConvexEnvelope::value, py::arg("lam"), two);
  mod.def("hull_value",
          [](int m, double l, LogBase b) { return hull_value(Dimension(m), l, b); },
          py::arg("m"), py::arg("lam"), two);
  mod.def(
      "hull_oracle",
      [](int m, int samples, LogBase b) {
        const auto pl = hull_oracle(Dimension(m), samples, b);
        return py::make_tuple(pl.xs(), pl.ys());
      },
      py::arg("m"), py::arg("samples"), two, "Vertices (xs, ys) of the sampled lower hull");

  py::class_<CheckEntry>(mod, "CheckEntry")
      .def_readonly("name", &CheckEntry::name)
      .def_readonly("claim", &CheckEntry::claim)
      .def_readonly("measured", &CheckEntry::measured)
      .def_readonly("threshold", &CheckEntry::threshold)
      .def_readonly("passed", &CheckEntry::pass);
  py::class_<CertificateReport>(mod, "CertificateReport")
      .def_property_readonly("m", [](const CertificateReport& r) { return r.m.value(); })
      .def_readonly("checks", &CertificateReport::checks)
      .def_readonly("overall", &CertificateReport::overall)
      .def("to_json", [](const CertificateReport& r) { return to_json(r).dump(); });
  mod.def("certify_proof", [](int m, int grid) { return certify_proof(Dimension(m), grid); },
          py::arg("m"), py::arg("grid_size") = tol::default_scan_points);

  py::class_<LambdaEstimate>(mod, "LambdaEstimate")
      .def_readonly("ppt_norm", &LambdaEstimate::ppt_norm)
      .def_readonly("ccnr_norm", &LambdaEstimate::ccnr_norm)
      .def_readonly("lam", &LambdaEstimate::lambda);

  mod.def("partial_transpose",
          py::overload_cast<const ComplexMatrix&, int, int>(&partial_transpose), py::arg("rho"),
          py::arg("m"), py::arg("n"));
  mod.def("realign", py::overload_cast<const ComplexMatrix&, int, int>(&realign),
          py::arg("rho"), py::arg("m"), py::arg("n"));
  mod.def("trace_norm", &trace_norm, py::arg("matrix"));
  mod.def(
      "lambda_of_state",
      [](const ComplexMatrix& rho, int m, int n) {
        return lambda_of_state(validate_state(rho, m, n));
      },
      py::arg("rho"), py::arg("m"), py::arg("n"));
  mod.def("isotropic_eof", &isotropic_eof, py::arg("d"), py::arg("fidelity"), two);
  mod.def(
      "eof_lower_bound",
      [](const ComplexMatrix& rho, int m, int n, LogBase b) {
        return eof_lower_bound(validate_state(rho, m, n), b);
      },
      py::arg("rho"), py::arg("m"), py::arg("n"), two);
  mod.def("maximally_entangled_state", &maximally_entangled_state, py::arg("d"));
  mod.def("isotropic_state", &isotropic_state, py::arg("d"), py::arg("fidelity"));
}
