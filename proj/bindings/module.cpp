#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algrest/driver.hpp"
#include "algrest/error.hpp"

namespace py = pybind11;
namespace drv = algrest::driver;

namespace {

std::string dumps(const drv::json &doc) { return drv::to_json_text(doc); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Algebraic restrictions of differential forms and symplectic "
              "invariants of zero-dimensional complete intersections. Every "
              "function returns a JSON string; the algrest package parses it.";

    py::register_exception<algrest::DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("qh_check",
          [](const std::vector<std::string> &vars, const std::string &ideal) {
              return dumps(drv::qh_check(vars, ideal));
          },
          py::arg("vars"), py::arg("ideal"));

    m.def("restrict_basis",
          [](const std::vector<std::string> &vars, const std::string &ideal, int p,
             bool closed, int trunc_cap) {
              return dumps(drv::restrict_basis(vars, ideal, p, closed, trunc_cap));
          },
          py::arg("vars"), py::arg("ideal"), py::arg("p") = 2,
          py::arg("closed") = false, py::arg("trunc_cap") = 24);

    m.def("reduce",
          [](const std::vector<std::string> &vars, const std::string &ideal,
             const std::string &form, int trunc_cap) {
              return dumps(drv::reduce(vars, ideal, form, trunc_cap));
          },
          py::arg("vars"), py::arg("ideal"), py::arg("form"), py::arg("trunc_cap") = 24);

    m.def("primitive",
          [](const std::vector<std::string> &vars, const std::string &ideal,
             const std::string &form, int trunc_cap) {
              return dumps(drv::primitive(vars, ideal, form, trunc_cap));
          },
          py::arg("vars"), py::arg("ideal"), py::arg("form"), py::arg("trunc_cap") = 24);

    m.def("invariants",
          [](const std::vector<std::string> &vars, const std::string &ideal,
             const std::string &form, int n, int trunc_cap) {
              return dumps(drv::invariants(vars, ideal, form, n, trunc_cap));
          },
          py::arg("vars"), py::arg("ideal"), py::arg("form"), py::arg("n"),
          py::arg("trunc_cap") = 24);

    m.def("classify",
          [](const std::string &family, const std::vector<std::string> &vars,
             const std::string &ideal, const std::string &form, int n, int trunc_cap) {
              return dumps(drv::classify(family, vars, ideal, form, n, trunc_cap));
          },
          py::arg("family"), py::arg("vars"), py::arg("ideal"), py::arg("form"),
          py::arg("n"), py::arg("trunc_cap") = 24);

    m.def("table",
          [](const std::string &family, long long a, long long b, int n, int trunc_cap) {
              return dumps(drv::table(family, a, b, n, trunc_cap));
          },
          py::arg("family"), py::arg("a") = 0, py::arg("b") = 0, py::arg("n"),
          py::arg("trunc_cap") = 24);
}
