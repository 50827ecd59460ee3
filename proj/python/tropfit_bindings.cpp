// Python bindings. Max-plus scalars cross the boundary as floats, with -inf
// standing for the tropical zero.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfit/fitting.hpp"
#include "tropfit/linalg.hpp"
#include "tropfit/puiseux.hpp"
#include "tropfit/report.hpp"

namespace py = pybind11;
using namespace tropfit;

namespace {

TropVector to_vector(const std::vector<double>& v) { return make_vector(v); }

std::vector<double> from_vector(const TropVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.to_ieee());
  return out;
}

TropMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
  TropMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = MaxPlus::from_ieee(rows[i][j]);
  }
  return a;
}

SampleSet samples(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& mode) {
  if (xs.size() != ys.size()) throw std::invalid_argument("x and y differ in length");
  if (parse_mode(mode) == Mode::maxplus) return SampleSet(xs, ys);
  std::vector<Sample> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], ys[i]});
  return log_transform(pts);
}

py::dict report_dict(const FitReport& r) {
  return py::module_::import("json").attr("loads")(to_json(r).dump());
}

FitReport report_from_dict(const py::dict& d) {
  const std::string text = py::str(py::module_::import("json").attr("dumps")(d));
  return report_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Max-plus polynomial and rational function fitting";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "best_approx_solve",
      [](const std::vector<std::vector<double>>& a, const std::vector<double>& b) {
        const ApproxSolution s = best_approx_solve(to_matrix(a), to_vector(b));
        return py::make_tuple(s.delta.to_ieee(), from_vector(s.solution));
      },
      py::arg("a"), py::arg("b"),
      "Best approximate solution of A x = b. Returns (delta, x).");

  m.def(
      "alternating_solve",
      [](const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
        const AlternatingSolution s = alternating_solve(to_matrix(a), to_matrix(b));
        return py::make_tuple(s.delta.to_ieee(), from_vector(s.x), from_vector(s.y));
      },
      py::arg("a"), py::arg("b"), "Alternating approximation of A x = B y. Returns (delta, x, y).");

  m.def(
      "min_poly",
      [](const std::vector<double>& exponents, const std::vector<double>& coeffs) -> py::object {
        const auto r = min_poly(PuiseuxPoly(exponents, std::span<const double>(coeffs)));
        if (!r) return py::none();
        return py::make_tuple(r->mu.value(), r->lo ? py::cast(*r->lo) : py::none(),
                              r->hi ? py::cast(*r->hi) : py::none());
      },
      py::arg("exponents"), py::arg("coefficients"),
      "Minimum (mu, lo, hi) of max_j (p_j x + theta_j), or None if unattained.");

  m.def(
      "fit_polynomial",
      [](const std::vector<double>& xs, const std::vector<double>& ys, std::size_t n, const std::string& mode) {
        return report_dict(make_report(fit_polynomial(samples(xs, ys, mode), n), parse_mode(mode)));
      },
      py::arg("x"), py::arg("y"), py::arg("n"), py::arg("mode") = "maxplus");

  m.def(
      "fit_rational",
      [](const std::vector<double>& xs, const std::vector<double>& ys, std::size_t n, std::size_t l,
         double epsilon, std::size_t max_iter, const std::string& stop_rule, const std::string& mode) {
        FitConfig c;
        c.n = n;
        c.l = l;
        c.epsilon = epsilon;
        c.iteration_cap = max_iter;
        if (stop_rule == "successive") {
          c.stop_rule = StopRule::successive;
        } else if (stop_rule != "best") {
          throw std::invalid_argument("stop_rule must be 'best' or 'successive'");
        }
        return report_dict(make_report(fit_rational(samples(xs, ys, mode), c), parse_mode(mode)));
      },
      py::arg("x"), py::arg("y"), py::arg("n"), py::arg("l"), py::arg("epsilon") = 1e-4,
      py::arg("max_iter") = 200, py::arg("stop_rule") = "best", py::arg("mode") = "maxplus");

  m.def(
      "evaluate",
      [](const py::dict& report, const std::vector<double>& xs) {
        const FitReport r = report_from_dict(report);
        std::vector<double> out;
        for (double x : xs) out.push_back(evaluate(r, x));
        return out;
      },
      py::arg("report"), py::arg("x"), "Evaluate a fit report at the given points.");

  m.def(
      "fixture",
      [] {
        std::vector<double> xs, ys;
        for (const auto& s : fixture_samples()) {
          xs.push_back(s.x);
          ys.push_back(s.y);
        }
        return py::make_tuple(xs, ys);
      },
      "The 21-sample reference dataset as (x, y).");
}
