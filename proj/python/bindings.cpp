#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dcf/cli.hpp"
#include "dcf/error.hpp"
#include "dcf/factor.hpp"
#include "dcf/galois.hpp"
#include "dcf/groups.hpp"
#include "dcf/json_io.hpp"
#include "dcf/text.hpp"

namespace py = pybind11;
using namespace dcf;

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "Domain";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

py::list labels_of(const FiniteGroup& G, const Subgroup& H) {
  py::list out;
  for (auto h : H) out.append(G.label(h));
  return out;
}

py::dict verdict_dict(const FiniteGroup& G, const NcpVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  if (v.counterexample) {
    py::dict c;
    c["M"] = labels_of(G, v.counterexample->M);
    c["N"] = labels_of(G, v.counterexample->N);
    c["g"] = G.label(v.counterexample->g);
    d["counterexample"] = c;
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

TowerField tower_from_text(const std::string& json) { return tower_from_json(Json::parse(json)); }

}  // namespace

PYBIND11_MODULE(_dcfield, m) {
  static py::exception<Error> error_type(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      inst.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<BaseField>(m, "BaseField")
      .def_static("rationals", &BaseField::rationals)
      .def_static("prime_field", &BaseField::prime_field, py::arg("p"))
      .def_static("rational_functions", &BaseField::rational_functions, py::arg("p"))
      .def_property_readonly("characteristic", &BaseField::characteristic)
      .def_property_readonly("name", &BaseField::name)
      .def("__eq__", [](const BaseField& a, const BaseField& b) { return a == b; })
      .def("__repr__", [](const BaseField& b) { return "BaseField(" + b.name() + ")"; });

  py::class_<TowerField>(m, "TowerField")
      .def(py::init<BaseField>())
      .def_static("from_json", &tower_from_text, py::arg("text"))
      .def("to_json", [](const TowerField& t) { return tower_to_json(t).dump(); })
      .def("extend", [](const TowerField& t, const std::string& minpoly, const std::string& name) {
        return extend_tower(t, parse_polynomial(minpoly, t), name);
      }, py::arg("minpoly"), py::arg("name"))
      .def_property_readonly("base", &TowerField::base)
      .def_property_readonly("level", &TowerField::level)
      .def_property_readonly("degree", &TowerField::degree)
      .def_property_readonly("generator_names", &TowerField::generator_names)
      .def("element", [](const TowerField& t, const std::string& s) { return parse_element(s, t); })
      .def("poly", [](const TowerField& t, const std::string& s) { return parse_polynomial(s, t); })
      .def("gen", [](const TowerField& t, std::size_t level) { return TowerElement::generator(t, level); });

  py::class_<TowerElement>(m, "Element")
      .def_property_readonly("field", &TowerElement::field)
      .def("is_zero", &TowerElement::is_zero)
      .def("inv", &TowerElement::inv)
      .def("lift_to", &TowerElement::lift_to)
      .def("__pow__", [](const TowerElement& a, unsigned long e) { return a.pow(e); })
      .def("__add__", [](const TowerElement& a, const TowerElement& b) { return a + b; })
      .def("__sub__", [](const TowerElement& a, const TowerElement& b) { return a - b; })
      .def("__mul__", [](const TowerElement& a, const TowerElement& b) { return a * b; })
      .def("__truediv__", [](const TowerElement& a, const TowerElement& b) { return a / b; })
      .def("__neg__", [](const TowerElement& a) { return -a; })
      .def("__eq__", [](const TowerElement& a, const TowerElement& b) { return a == b; })
      .def("__str__", &TowerElement::to_string)
      .def("__repr__", [](const TowerElement& a) { return "Element(" + a.to_string() + ")"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("field", &Polynomial::field)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("__call__", &Polynomial::eval)
      .def("monic", &Polynomial::monic)
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", [](const Polynomial& f) { return f.to_string(); })
      .def("__repr__", [](const Polynomial& f) { return "Polynomial(" + f.to_string() + ")"; });

  m.def("factor", [](const Polynomial& f) {
    py::list out;
    for (const auto& [g, e] : factor(f).factors) out.append(py::make_tuple(g, e));
    return out;
  }, py::arg("f"));
  m.def("is_separable", &is_separable);

  py::class_<ClosurePresentation>(m, "Closure")
      .def(py::init<BaseField>())
      .def(py::init<TowerField>())
      .def_property_readonly("field", &ClosurePresentation::field)
      .def("adjoin_root", &ClosurePresentation::adjoin_root)
      .def("roots", &ClosurePresentation::roots)
      .def("pk_root", &ClosurePresentation::pk_root, py::arg("a"), py::arg("k"))
      .def("conjugates", &ClosurePresentation::conjugates, py::arg("x"), py::arg("S") = std::vector<TowerElement>{})
      .def("to_json", [](const ClosurePresentation& c) { return session_to_json(c).dump(); })
      .def_static("from_json", [](const std::string& s) { return session_from_json(Json::parse(s)); });

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec) { return make_group(spec); }))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("label", [](const FiniteGroup& G) { return group_label(G); })
      .def("normal_subgroups", [](const FiniteGroup& G) {
        py::list out;
        for (const auto& N : normal_subgroups(G)) out.append(labels_of(G, N));
        return out;
      })
      .def("has_ncp", [](const FiniteGroup& G) { return verdict_dict(G, has_ncp(G)); });

  m.def("galois_group", [](const TowerField& E, std::size_t base_level) {
    const GaloisData D = galois_group(E, base_level);
    return D.group;
  }, py::arg("field"), py::arg("base_level") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
