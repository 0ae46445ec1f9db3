#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "x0calc/disc_analysis.hpp"
#include "x0calc/eis_chow.hpp"
#include "x0calc/error.hpp"
#include "x0calc/gamma0.hpp"
#include "x0calc/hecke_eis.hpp"
#include "x0calc/lseries.hpp"
#include "x0calc/modular_forms.hpp"

namespace py = pybind11;
using namespace x0calc;

namespace {

// Reports cross the boundary as plain Python containers via their JSON form.
py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DinfGConvention convention_of(const std::string& s) {
  if (s == "lemma") return DinfGConvention::IntersectionLemma;
  if (s == "orthogonal") return DinfGConvention::Orthogonal;
  throw Error(ErrorCode::InvalidArgument, "convention must be 'lemma' or 'orthogonal', got '" + s + "'");
}

py::list big_list(const QExpansion& q) {
  py::list out;
  for (const auto& c : q.coeffs) out.append(py::int_(py::str(c.str())));
  return out;
}

}  // namespace

PYBIND11_MODULE(_x0calc, m) {
  m.doc() = "Eisenstein arithmetic intersection numbers on X_0(N)";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(e.name()), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("invariants", [](std::int64_t N) {
    const Gamma0Data d = invariants(N);
    return to_py({{"N", d.N}, {"psi", d.psi}, {"nu2", d.nu2}, {"nu3", d.nu3}, {"cusps", d.nu_inf}, {"genus", d.genus}});
  }, py::arg("N"));
  m.def("genus_quotient", &genus_quotient, py::arg("N"), py::arg("p"));

  py::class_<SymbolicReal>(m, "SymbolicReal")
      .def(py::init([](const std::string& text) { return SymbolicReal::parse(text); }), py::arg("text") = "0")
      .def_static("kappa", [](const std::string& coef) { return SymbolicReal::kappa(parse_rational(coef)); },
                  py::arg("coef") = "1")
      .def_static("log", [](std::int64_t p, const std::string& coef) { return SymbolicReal::log(p, parse_rational(coef)); },
                  py::arg("p"), py::arg("coef") = "1")
      .def("evaluate", [](const SymbolicReal& x, int digits) {
        const EvalResult e = x.evaluate(digits);
        return py::make_tuple(e.value, e.error_bound, e.decimal);
      }, py::arg("digits") = 15)
      .def("to_dict", [](const SymbolicReal& x) { return to_py(x.to_json()); })
      .def("is_zero", &SymbolicReal::is_zero)
      .def("__add__", [](const SymbolicReal& a, const SymbolicReal& b) { return a + b; })
      .def("__sub__", [](const SymbolicReal& a, const SymbolicReal& b) { return a - b; })
      .def("__neg__", [](const SymbolicReal& a) { return -a; })
      .def("__eq__", [](const SymbolicReal& a, const SymbolicReal& b) { return a == b; })
      .def("__str__", &SymbolicReal::to_string)
      .def("__repr__", [](const SymbolicReal& x) { return "SymbolicReal('" + x.to_string() + "')"; });

  py::class_<GramMatrix>(m, "GramMatrix")
      .def_property_readonly("symmetric", &GramMatrix::is_symmetric)
      .def_property_readonly("diagnostics", [](const GramMatrix& g) { return g.diagnostics; })
      .def("entry", &GramMatrix::at, py::arg("i"), py::arg("j"))
      .def("to_dict", [](const GramMatrix& g, int digits) { return to_py(g.to_json(digits)); }, py::arg("digits") = 0);
  m.def("gram", [](std::int64_t N, const std::string& c) { return gram(N, convention_of(c)); }, py::arg("N"),
        py::arg("convention") = "lemma");
  m.def("omega_eis_sq", [](std::int64_t N, const std::string& c) { return omega_eis_sq(N, convention_of(c)); },
        py::arg("N"), py::arg("convention") = "lemma");
  m.def("w_square", [](std::int64_t N, const std::string& c) { return w_square(N, convention_of(c)); }, py::arg("N"),
        py::arg("convention") = "lemma");

  py::class_<EisOperator>(m, "EisOperator")
      .def("to_dict", [](const EisOperator& op) { return to_py(op.to_json()); })
      .def("entry", &EisOperator::at, py::arg("row"), py::arg("col"))
      .def("compose", &EisOperator::compose)
      .def("commutes_with", [](const EisOperator& a, const EisOperator& b) { return commutator_is_zero(a, b); });
  m.def("t_hat", &t_hat, py::arg("l"), py::arg("N"));
  m.def("w_hat", &w_hat, py::arg("d"), py::arg("N"));
  m.def("hecke_shift", &hecke_shift, py::arg("l"), py::arg("N"));
  m.def("is_self_adjoint", &is_self_adjoint, py::arg("op"), py::arg("gram"));

  m.def("eta_expand", [](const std::string& eta, std::size_t M) { return big_list(eta_expand(EtaQuotient::parse(eta), M)); },
        py::arg("eta"), py::arg("M"));
  m.def("heegner_points", [](std::int64_t N, int disc) { return to_py(heegner_points(N, disc).to_json()); },
        py::arg("N"), py::arg("disc"));
  m.def("canonical_decomposition", [](std::int64_t N) { return to_py(canonical_decomposition(N).to_json()); },
        py::arg("N"));

  py::class_<EigenformData>(m, "Eigenform")
      .def_readonly("label", &EigenformData::label)
      .def_readonly("level", &EigenformData::level)
      .def_readonly("al_sign", &EigenformData::al_sign)
      .def_readonly("an", &EigenformData::an)
      .def_property_readonly("root_number", &EigenformData::root_number);
  m.def("ingest_file", &ingest_file, py::arg("path"));
  m.def("parse_eigenform", &parse_eigenform, py::arg("line"));
  m.def("level11_form", [](std::size_t M) { return from_qexpansion("11a", eta_expand(level11_quotient(), M), -1); },
        py::arg("M") = 600);
  m.def("l_value", [](const EigenformData& f, int twist) { return l_value(f, twist).value; }, py::arg("f"),
        py::arg("twist") = 0);
  m.def("l_derivative", [](const EigenformData& f) { return l_derivative(f).value; }, py::arg("f"));
  m.def("symmetry_residual", [](const EigenformData& f, int twist, double t) { return symmetry_residual(f, twist, t); },
        py::arg("f"), py::arg("twist") = 0, py::arg("t") = 0.1);
  m.def("petersson", [](const EigenformData& f, int order) { return petersson(f, order).value; }, py::arg("f"),
        py::arg("quad_order") = 48);
  m.def("omega_f_sq", [](const EigenformData& f) { return to_py(omega_f_sq(f).to_json()); }, py::arg("f"));

  m.def("verify_analysis", [](int radial, int angular, double tol) { return to_py(verify_analysis(radial, angular, tol).to_json()); },
        py::arg("radial") = 256, py::arg("angular") = 512, py::arg("tolerance") = 1e-6);
}
