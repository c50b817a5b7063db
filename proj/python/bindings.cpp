#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "urbanik/bessel.hpp"
#include "urbanik/complex_gamma.hpp"
#include "urbanik/density.hpp"
#include "urbanik/diagnostics.hpp"
#include "urbanik/errors.hpp"
#include "urbanik/report_io.hpp"

namespace py = pybind11;
using namespace urbanik;

namespace {

QuadSpec make_spec(double rel_tol, double abs_tol, long max_nodes) {
  QuadSpec s{abs_tol, rel_tol, max_nodes};
  s.validate();
  return s;
}

py::dict to_dict(const DensityEval& e) {
  py::dict d;
  d["c"] = e.c;
  d["t"] = e.t;
  d["value"] = e.value;
  d["log_value"] = e.log_value;
  d["abs_err"] = e.abs_err_estimate;
  d["rel_err"] = e.rel_err;
  d["method"] = std::string(method_name(e.method));
  return d;
}

py::dict to_dict(const Report& r) {
  py::dict d;
  d["check"] = r.check_name;
  py::list inputs;
  for (const auto& [k, v] : r.inputs) inputs.append(py::make_tuple(k, v));
  d["inputs"] = inputs;
  d["observed"] = r.observed;
  d["expected"] = r.expected;
  d["expected_law"] = r.expected_law;
  d["max_abs_dev"] = r.max_abs_dev;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.pass;
  d["runtime_ms"] = r.runtime_ms;
  return d;
}

py::dict to_dict(const KreinTrace& k) {
  py::dict d;
  d["c"] = k.c;
  d["truncations"] = k.truncations;
  d["partial_integrals"] = k.partial_integrals;
  d["classification"] = std::string(krein_class_name(k.classification));
  d["tail_exponent"] = k.tail_exponent;
  d["predicted_tail_exponent"] = k.predicted_tail_exponent;
  return d;
}

DensityEval evaluate(const std::string& method, double c, double t, const QuadSpec& spec) {
  if (method == "auto") return density(c, t, spec);
  if (method == "direct") return density_direct(c, t, spec);
  if (method == "shifted") return density_shifted(c, t, spec);
  if (method == "lowered") return density_lowered(c, t, spec);
  if (method == "asympt-large") return asympt_large(c, t);
  if (method == "asympt-small") return asympt_small(c, t);
  if (method == "closed") return density_closed(c, t);
  throw DomainError("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Urbanik semigroup densities e_c(t) and their diagnostic checks";

  auto base = py::register_exception<Error>(m, "UrbanikError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<CancellationError>(m, "CancellationError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  const QuadSpec defaults;
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("gamma_pow", &gamma_pow, py::arg("z"), py::arg("c"));
  m.def("digamma", &digamma, py::arg("z"));
  m.def("binet_mu", &binet_mu, py::arg("z"));
  m.def("bessel_k0", &bessel_k0, py::arg("x"));

  m.def(
      "density",
      [](double c, double t, const std::string& method, double rel_tol, double abs_tol,
         long max_nodes) {
        return to_dict(evaluate(method, c, t, make_spec(rel_tol, abs_tol, max_nodes)));
      },
      py::arg("c"), py::arg("t"), py::arg("method") = "auto",
      py::arg("rel_tol") = defaults.target_rel_tol, py::arg("abs_tol") = defaults.target_abs_tol,
      py::arg("max_nodes") = defaults.max_nodes,
      "e_c(t) as a dict with value, log_value, abs_err, rel_err and method.");

  m.def(
      "large_t_ratio",
      [](double c, double t) {
        const LargeTRatio r = large_t_ratio(c, t);
        return py::make_tuple(r.ratio, r.rel_err, std::string(method_name(r.method)));
      },
      py::arg("c"), py::arg("t"));

  m.def("check_moment", [](double c, int n) { return to_dict(check_moment(c, n)); },
        py::arg("c"), py::arg("n"));
  m.def("check_mellin", [](double c, double z) { return to_dict(check_mellin(c, z)); },
        py::arg("c"), py::arg("z"));
  m.def("check_fourier", [](double c, double x) { return to_dict(check_fourier(c, x)); },
        py::arg("c"), py::arg("x"));
  m.def(
      "check_semigroup",
      [](double c, double d, double t) { return to_dict(check_semigroup(c, d, t)); },
      py::arg("c"), py::arg("d"), py::arg("t"));
  m.def(
      "check_complete_monotonicity",
      [](double c, const std::vector<double>& grid, int order) {
        return to_dict(check_complete_monotonicity(c, grid, order));
      },
      py::arg("c"), py::arg("grid"), py::arg("order"));
  m.def(
      "check_negative_definite",
      [](const std::vector<double>& x) { return to_dict(check_negative_definite(x)); },
      py::arg("points"));
  m.def("check_malmsten", [](Cx z) { return to_dict(check_malmsten(z)); }, py::arg("z"));
  m.def(
      "check_hankel_inverse_gamma", [](double c) { return to_dict(check_hankel_inverse_gamma(c)); },
      py::arg("c"));
  m.def(
      "krein_integral",
      [](double c, const std::vector<double>& truncations) {
        return to_dict(krein_integral(c, truncations));
      },
      py::arg("c"), py::arg("truncations") = std::vector<double>{1e2, 1e3, 1e4, 1e5, 1e6});
  m.def(
      "asympt_ratio_rows",
      [](double c, const std::vector<double>& ts, const std::string& mode) {
        if (mode != "large" && mode != "small") throw DomainError("mode must be large or small");
        py::list out;
        for (const auto& r :
             asympt_ratio_rows(c, ts, mode == "large" ? AsymptMode::Large : AsymptMode::Small)) {
          py::dict d;
          d["t"] = r.t;
          d["density"] = to_dict(r.density);
          d["asymptotic"] = to_dict(r.asymptotic);
          d["ratio"] = r.ratio;
          d["scaled_residual"] = r.scaled_residual;
          out.append(d);
        }
        return out;
      },
      py::arg("c"), py::arg("ts"), py::arg("mode") = "large");
  m.def(
      "run_suite",
      [] {
        py::list out;
        for (const auto& r : run_suite()) out.append(to_dict(r));
        return out;
      },
      "The standard diagnostic battery, one dict per check.");
  m.def(
      "density_table",
      [](const std::vector<double>& cs, const std::vector<double>& ts, const std::string& format) {
        std::vector<DensityEval> rows;
        for (double c : cs) {
          for (double t : ts) rows.push_back(density(c, t));
        }
        return write_density(rows, parse_format(format));
      },
      py::arg("cs"), py::arg("ts"), py::arg("format") = "csv",
      "Serialized density rows, byte-identical to the CLI's table output.");
}
