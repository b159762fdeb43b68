#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pitypical/presets.hpp"
#include "pitypical/selftest.hpp"

namespace py = pybind11;
using namespace pityp;

namespace {

py::object json_to_py(const ojson& j) {
  switch (j.type()) {
    case ojson::value_t::null: return py::none();
    case ojson::value_t::boolean: return py::bool_(j.get<bool>());
    case ojson::value_t::number_integer: return py::int_(j.get<i64>());
    case ojson::value_t::number_unsigned: return py::int_(j.get<u64>());
    case ojson::value_t::number_float: return py::float_(j.get<double>());
    case ojson::value_t::string: return py::str(j.get<std::string>());
    case ojson::value_t::array: {
      py::list l;
      for (const auto& x : j) l.append(json_to_py(x));
      return l;
    }
    case ojson::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
      return d;
    }
    default: return py::none();
  }
}

FrobeniusSeries default_f(const SpecPtr& s, int D) { return default_frobenius(s, D); }

// pybind11 holders must be non-const; the C++ API hands out SpecPtr =
// shared_ptr<const ...>, so returns get const_pointer_cast'ed on the way out
using MSpec = std::shared_ptr<LocalFieldSpec>;
MSpec unconst(SpecPtr s) { return std::const_pointer_cast<LocalFieldSpec>(std::move(s)); }

}  // namespace

PYBIND11_MODULE(_pitypical, m) {
  m.doc() = "exact Lubin-Tate / Witt / prism arithmetic over p-adic integer rings";

  py::register_exception<Error>(m, "ArithmeticError");

  py::class_<LocalFieldSpec, MSpec>(m, "FieldSpec")
      .def_readonly("p", &LocalFieldSpec::p)
      .def_readonly("q", &LocalFieldSpec::q)
      .def_readonly("e", &LocalFieldSpec::e)
      .def_readonly("f", &LocalFieldSpec::f)
      .def_readonly("n", &LocalFieldSpec::n)
      .def_readonly("M", &LocalFieldSpec::M)
      .def("__repr__", [](const LocalFieldSpec& s) { return to_json(s).dump(); })
      .def("to_dict", [](const LocalFieldSpec& s) { return json_to_py(to_json(s)); });

  m.def(
      "preset", [](const std::string& name) { return unconst(preset_spec(name)); },
      py::arg("name"), "built-in field presentation: q2, q3, q2-ramified, q4-unramified");
  m.def("preset_names", &preset_names);
  m.def(
      "make_spec",
      [](u64 p, std::vector<i64> g, std::vector<i64> E, int M) {
        return unconst(make_field_spec_int(p, std::move(g), std::move(E), M));
      },
      py::arg("p"), py::arg("g"), py::arg("E"), py::arg("M") = 12);

  py::class_<OElement>(m, "O")
      .def_static("zero", &OElement::zero)
      .def_static("one", &OElement::one)
      .def_static("pi", &OElement::pi)
      .def_static("from_int", &OElement::from_int)
      .def("__add__", &OElement::operator+)
      .def("__sub__",
           [](const OElement& a, const OElement& b) { return a - b; })
      .def("__mul__", &OElement::operator*)
      .def("__neg__", [](const OElement& a) { return -a; })
      .def("__pow__", [](const OElement& a, u64 n) { return a.pow(n); })
      .def("__eq__", [](const OElement& a, const OElement& b) { return a.eq(b); })
      .def("val_pi", [](const OElement& a) { return a.val_pi(); })
      .def("div_pi", &OElement::div_pi_exact, py::arg("k"))
      .def("inverse", &OElement::inverse)
      .def("residue", &OElement::residue)
      .def_readonly("valid_prec", &OElement::vp)
      .def("__repr__", [](const OElement& a) { return to_json(a).dump(); })
      .def("to_dict", [](const OElement& a) { return json_to_py(to_json(a)); });

  m.def("group_law", [](const SpecPtr& s, int D) {
    return json_to_py(to_json(build_group_law(default_f(s, D), D)));
  });
  m.def("endomorphism", [](const SpecPtr& s, i64 a, int D) {
    return json_to_py(to_json(build_endomorphism(default_f(s, D), a, D)));
  });
  m.def("logarithm", [](const SpecPtr& s, int D) {
    return json_to_py(to_json(logarithm(default_f(s, D), D)));
  });
  m.def("genus", [](const SpecPtr& s, int mdim, int D) {
    return json_to_py(to_json(genus_cp(honda_model(s, D), mdim)));
  });

  m.def("witt_add", [](const SpecPtr& s, std::pair<OElement, OElement> a,
                       std::pair<OElement, OElement> b) {
    (void)s;
    auto r = witt_add(WittPair<OElement>{a.first, a.second}, WittPair<OElement>{b.first, b.second});
    return std::make_pair(r.a0, r.a1);
  });
  m.def("witt_mul", [](const SpecPtr& s, std::pair<OElement, OElement> a,
                       std::pair<OElement, OElement> b) {
    (void)s;
    auto r = witt_mul(WittPair<OElement>{a.first, a.second}, WittPair<OElement>{b.first, b.second});
    return std::make_pair(r.a0, r.a1);
  });
  m.def("ghost", [](std::pair<OElement, OElement> a) {
    return ghost_map(WittPair<OElement>{a.first, a.second});
  });

  m.def("theta_poly", [](const SpecPtr& s, int k) { return json_to_py(to_json(theta_poly(s, k))); });
  m.def("theta_value", &theta_value, py::arg("spec"), py::arg("k"), py::arg("a"));

  m.def("compute_qn", [](const SpecPtr& s, int n, int D) {
    return json_to_py(to_json(compute_qn(default_f(s, D), n, D)));
  });
  m.def("prism_verify", [](const SpecPtr& s, int n, int D) {
    return json_to_py(to_json(verify_prism_condition(default_f(s, D), n, D)));
  });
  m.def("prism_certificate", [](const SpecPtr& s, int n, int D) {
    return json_to_py(to_json(prism_certificate(default_f(s, D), n, D)));
  });

  m.def("selftest", [](u64 seed) { return json_to_py(run_selftest(seed)); }, py::arg("seed") = 0);
}
