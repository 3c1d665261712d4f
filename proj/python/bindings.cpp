#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qweyl/errors.hpp"
#include "qweyl/gauss.hpp"
#include "qweyl/haar.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/suites.hpp"
#include "qweyl/uq.hpp"
#include "qweyl/weyl.hpp"

namespace py = pybind11;
using namespace qweyl;

namespace {

GaussianState state_from_legs(const std::vector<std::tuple<double, Complex>>& legs) {
  std::vector<GaussianFactor> f;
  for (const auto& [eps, gamma] : legs) f.push_back({eps, gamma, {1.0, 0.0}});
  return GaussianState::product(f);
}

}  // namespace

PYBIND11_MODULE(_qweyl, m) {
  m.doc() = "Real q-Weyl algebra, U_q(sl_{n+1}(R)) actions and the quantum-trace integral";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<PoleAtEvaluationPoint>(m, "PoleAtEvaluationPoint", base.ptr());
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
  py::register_exception<DescriptorMismatch>(m, "DescriptorMismatch", base.ptr());
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", base.ptr());
  py::register_exception<InvalidContext>(m, "InvalidContext", base.ptr());
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& s) { return parse_scalar(s); }), py::arg("text"))
      .def("eval", [](const Scalar& c, double phi) { return c.eval(NumericContext(phi)); }, py::arg("phi"))
      .def("star", &Scalar::star)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& c) { return "Scalar('" + c.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self);

  py::class_<AlgebraElement>(m, "AlgebraElement")
      .def(py::init([](const std::string& s, int n) { return parse_algebra(s, AlgebraDescriptor(n)); }),
           py::arg("text"), py::arg("n") = 1)
      .def_property_readonly("n", &AlgebraElement::n)
      .def("is_zero", &AlgebraElement::is_zero)
      .def("star", [](const AlgebraElement& a) { return star(a); })
      .def("__str__", &AlgebraElement::to_string)
      .def("__repr__", [](const AlgebraElement& a) { return "AlgebraElement('" + a.to_string() + "')"; })
      .def("__len__", &AlgebraElement::size)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  py::class_<HopfElement>(m, "HopfElement")
      .def(py::init([](const std::string& s) { return parse_hopf(s); }), py::arg("text"))
      .def("counit", [](const HopfElement& h) { return counit(h); })
      .def("antipode", [](const HopfElement& h) { return antipode(h); })
      .def("star", [](const HopfElement& h) { return star(h); })
      .def("__str__", &HopfElement::to_string)
      .def("__repr__", [](const HopfElement& h) { return "HopfElement('" + h.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  m.def("normalize", [](const std::string& s, int n) {
    return std::visit([](const auto& v) { return v.to_string(); }, parse_expression(s, AlgebraDescriptor(n)));
  }, py::arg("text"), py::arg("n") = 1, "Canonical form of an algebra or Hopf expression, as text.");
  m.def("verify_identity", [](const AlgebraElement& a, const AlgebraElement& b) {
    const IdentityResult r = verify_identity(a, b);
    return py::make_tuple(r.holds, r.remainder);
  }, py::arg("lhs"), py::arg("rhs"), "(holds, remainder) for lhs = rhs.");
  m.def("act", [](const HopfElement& h, const AlgebraElement& f, bool rho) {
    const ActionEngine engine(f.descriptor(), rho ? HyperboloidExpansion::Rho : HyperboloidExpansion::Q);
    return engine.act_element(h, f);
  }, py::arg("h"), py::arg("f"), py::arg("rho_expansion") = false);
  m.def("gamma", [](int n) { return gamma(AlgebraDescriptor(n)); }, py::arg("n"));
  m.def("rho", [](int n, int k) { return rho(AlgebraDescriptor(n), k); }, py::arg("n"), py::arg("k"));
  m.def("a_op", [](int n, int k) { return a_op(AlgebraDescriptor(n), k); }, py::arg("n"), py::arg("k"));
  m.def("b_op", [](int n, int k) { return b_op(AlgebraDescriptor(n), k); }, py::arg("n"), py::arg("k"));

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init(&state_from_legs), py::arg("legs"), "Product Gaussian from (epsilon, gamma) per leg.")
      .def_property_readonly("legs", &GaussianState::legs)
      .def("value", [](const GaussianState& s, const std::vector<double>& t) { return s.value(t); }, py::arg("t"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const GaussianState& s, Complex c) { return c * s; });
  m.def("inner", &inner, py::arg("u"), py::arg("v"), "L^2 inner product, linear in the first argument.");
  m.def("apply", [](const AlgebraElement& a, const GaussianState& s, double phi) {
    return apply(represent(a), s, NumericContext(phi));
  }, py::arg("a"), py::arg("state"), py::arg("phi") = NumericContext().phi());

  py::class_<FiniteRankOperator>(m, "FiniteRankOperator")
      .def_property_readonly("rank_bound", &FiniteRankOperator::rank_bound)
      .def("apply", &FiniteRankOperator::apply)
      .def("adjoint", &FiniteRankOperator::adjoint)
      .def(py::self + py::self)
      .def("__rmul__", [](const FiniteRankOperator& f, Complex c) { return c * f; });
  m.def("rank_one", &rank_one, py::arg("ket"), py::arg("bra"));
  m.def("quantum_trace", [](const FiniteRankOperator& f, double phi, double c, bool abs_q) {
    const IntegralContext ictx{c, NumericContext(phi), abs_q ? TraceConvention::AbsQInverse : TraceConvention::QInverse};
    return quantum_trace(AlgebraDescriptor(f.legs()), f, ictx);
  }, py::arg("f"), py::arg("phi") = NumericContext().phi(), py::arg("c") = 1.0, py::arg("abs_q_inverse") = false);
  m.def("act_on_operator", [](const HopfElement& h, const FiniteRankOperator& f, double phi) {
    const ActionEngine engine{AlgebraDescriptor(f.legs())};
    return act_on_operator(engine, h, f, NumericContext(phi));
  }, py::arg("h"), py::arg("f"), py::arg("phi") = NumericContext().phi());

  py::class_<ReportRecord>(m, "ReportRecord")
      .def_readonly("suite", &ReportRecord::suite)
      .def_readonly("case", &ReportRecord::case_id)
      .def_readonly("residual", &ReportRecord::residual)
      .def_readonly("passed", &ReportRecord::pass)
      .def_readonly("witness", &ReportRecord::witness)
      .def("__str__", &format_record);

  std::vector<std::string> names;
  for (SuiteId id : all_suites()) names.push_back(suite_name(id));
  m.attr("SUITES") = names;
  m.def("run_suite", [](const std::string& name, int n, double phi, double tolerance, std::optional<int> samples,
                        std::uint64_t seed, double c) {
    const auto id = suite_from_name(name);
    if (!id) throw py::value_error("unknown suite " + name);
    SuiteOptions opt{n, phi, tolerance, samples, seed, c};
    py::gil_scoped_release release;
    return run_suite(*id, opt).records();
  }, py::arg("suite"), py::arg("n") = 1, py::arg("phi") = SuiteOptions{}.phi, py::arg("tolerance") = 1e-9,
        py::arg("samples") = py::none(), py::arg("seed") = 7, py::arg("c") = 1.0);
}
