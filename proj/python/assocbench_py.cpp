#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "assoc/chazy.hpp"
#include "assoc/frobenius.hpp"
#include "assoc/harness.hpp"
#include "assoc/quasimodular.hpp"
#include "assoc/yangbaxter.hpp"

namespace py = pybind11;
using namespace assoc;

namespace {

std::string run_json(const std::string& selector, unsigned q_order, unsigned series_order, double tol,
                     unsigned trials, std::uint64_t seed, bool timings) {
  if (!is_selector(selector)) throw py::value_error("unknown suite '" + selector + "'");
  Config cfg{q_order, series_order, tol, trials, seed};
  py::gil_scoped_release release;
  SuiteReport r = run_suite(selector, cfg);
  return to_json(r, cfg, FormatOptions{timings});
}

std::vector<std::string> coefficients(const QSeries& s) {
  std::vector<std::string> out;
  for (unsigned i = 0; i <= s.order(); ++i) out.push_back(to_string(s[i]));
  return out;
}

}  // namespace

PYBIND11_MODULE(_assoc, m) {
  m.def("suite_names", &suite_names);
  m.def("run_json", &run_json, py::arg("selector") = "all", py::arg("q_order") = 64, py::arg("series_order") = 8,
        py::arg("tol") = 1e-9, py::arg("trials") = 100, py::arg("seed") = 0, py::arg("timings") = true);
  m.def(
      "eisenstein",
      [](int k, unsigned order) {
        try {
          return coefficients(eisenstein(k, order));
        } catch (const std::invalid_argument& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("k"), py::arg("order"));
  m.def("discriminant", [](unsigned order) { return coefficients(discriminant(order)); }, py::arg("order"));
  m.def("jet_factor", [] { return jet_equivalence().factor.to_string(); });
  m.def("associativity_form", [] { return associativity_form(FrobAlg3::symbolic()).to_string(); });
  m.def(
      "qybe_holds",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        auto q = [](const std::string& s) {
          BigRat r(s);
          r.canonicalize();
          return r;
        };
        return qybe_holds(q(a), q(b), q(c), q(d));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
}
