#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "htcraig/calculus.hpp"
#include "htcraig/interpolation.hpp"
#include "htcraig/json_io.hpp"
#include "htcraig/normalize.hpp"
#include "htcraig/semantics.hpp"

namespace py = pybind11;
using namespace htcraig;

namespace {

std::map<std::string, std::string> to_dict(const Assignment& v) {
  std::map<std::string, std::string> out;
  for (const auto& [atom, value] : v.values()) out[atom] = std::string(to_string(value));
  return out;
}

Assignment from_dict(const std::map<std::string, std::string>& d) {
  Assignment v;
  for (const auto& [atom, text] : d) {
    auto value = parse_truth_value(text);
    if (!value) throw py::value_error("invalid truth value '" + text + "' for " + atom);
    v.set(atom, *value);
  }
  return v;
}

Formula as_formula(const py::object& o) {
  if (py::isinstance<Formula>(o)) return o.cast<Formula>();
  return parse(o.cast<std::string>());
}

py::object verdict(const EntailmentVerdict& v) {
  py::object cm = py::none();
  if (v.countermodel) cm = py::cast(to_dict(*v.countermodel));
  return py::make_tuple(v.holds, cm);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Craig interpolation for here-and-there logic";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse(text); }))
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", &Formula::hash)
      .def_property_readonly("size", &Formula::size)
      .def_property_readonly("weight", &Formula::weight)
      .def("voc", [](const Formula& f) { return voc(f); })
      .def("classes", [](const Formula& f) {
        std::vector<std::string> out;
        for (auto c : classify(f)) out.emplace_back(to_string(c));
        return out;
      });

  m.def("parse", [](const std::string& text) { return parse(text); });

  m.def(
      "eval",
      [](const py::object& f, const std::map<std::string, std::string>& v) {
        return std::string(to_string(eval(as_formula(f), from_dict(v))));
      },
      py::arg("formula"), py::arg("assignment"));
  m.def(
      "entails",
      [](const py::object& a, const py::object& b) {
        return verdict(entails(as_formula(a), as_formula(b)));
      },
      "Returns (holds, countermodel or None).");
  m.def("equivalent", [](const py::object& a, const py::object& b) {
    return verdict(equivalent(as_formula(a), as_formula(b)));
  });
  m.def("truth_table", [](const py::object& f) {
    std::vector<std::pair<std::map<std::string, std::string>, std::string>> rows;
    for (const auto& row : truth_table(as_formula(f))) {
      rows.emplace_back(to_dict(row.assignment), std::string(to_string(row.value)));
    }
    return rows;
  });

  m.def("to_nh_nnf", [](const py::object& f) { return to_nh_nnf(as_formula(f)); });
  m.def("body_normalize", [](const py::object& f) { return body_normalize(as_formula(f)); });
  m.def("to_cnf", [](const py::object& f) {
    std::vector<Formula> out;
    for (const auto& c : to_cnf(as_formula(f))) out.push_back(c.to_formula());
    return out;
  });
  m.def("strengthen", [](const py::object& f) { return strengthen(as_formula(f)); });

  m.def(
      "prove",
      [](const py::object& a, const py::object& b) -> py::tuple {
        auto outcome =
            prove(SplitSequent({L(as_formula(a))}, {R(body_normalize(as_formula(b)))}));
        if (outcome.proved()) return py::make_tuple(true, py::str(to_json(outcome.proof()).dump()));
        return py::make_tuple(false, py::cast(to_dict(outcome.failure().countermodel)));
      },
      "Returns (True, proof JSON text) or (False, countermodel).");

  m.def(
      "interpolate",
      [](const py::object& a, const py::object& b) {
        return to_json(craig_interpolant(as_formula(a), as_formula(b))).dump();
      },
      "Interpolation result as JSON text.");

  m.def(
      "verify_interpolant",
      [](const py::object& a, const py::object& c, const py::object& b) {
        auto r = verify_interpolant(as_formula(a), as_formula(c), as_formula(b));
        return std::map<std::string, bool>{{"a_entails_c", r.a_entails_c},
                                           {"c_entails_b", r.c_entails_b},
                                           {"voc_ok", r.voc_ok}};
      });
}
