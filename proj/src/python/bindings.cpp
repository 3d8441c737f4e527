#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pcclosure/parse.hpp"
#include "pcclosure/regbasis.hpp"
#include "pcclosure/seqfile.hpp"

namespace py = pybind11;
using namespace pcc;

namespace {

// Coordinates cross the boundary as Python ints via their decimal form;
// cpp_int has no fixed-width representation to hand over.
py::object py_big(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

Int from_py_int(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::object group_to_py(const GroupElement& v) {
  if (v.is_infinity()) return py::none();
  py::tuple t(v.coords().size());
  for (size_t i = 0; i < v.coords().size(); ++i) t[i] = py_big(v.coords()[i]);
  return t;
}

GroupElement group_from_py(const py::sequence& coords) {
  std::vector<Int> c;
  for (const auto& x : coords) c.push_back(from_py_int(x));
  return GroupElement::finite(std::move(c));
}

PCSeq make_seq(int rank, const std::vector<std::string>& prefix,
               const std::string& u, const py::sequence& b) {
  std::vector<FieldElement> p;
  for (const auto& e : prefix) p.push_back(parse_element(e, rank));
  return PCSeq(std::move(p),
               GeoTail{parse_element(u, rank), group_from_py(b),
                       Int(prefix.size()) - 1});
}

std::string classification_kind(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::pseudo_limit:
      return "pseudo_limit";
    case Classification::Kind::coset:
      return "coset";
    case Classification::Kind::outside:
      return "outside";
  }
  return "";
}

std::string classification_reason(const Classification& c) {
  switch (c.reason) {
    case Classification::Reason::none:
      return "";
    case Classification::Reason::gauge_undershoot:
      return "gauge_undershoot";
    case Classification::Reason::coset_prime_fail:
      return "coset_prime_fail";
    case Classification::Reason::gauge_mismatch:
      return "gauge_mismatch";
  }
  return "";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact polynomial closures of pseudo-convergent sequences over "
      "lex-valued rational function fields";

  py::class_<FieldElement>(m, "FieldElement")
      .def("__str__", &FieldElement::str)
      .def("__repr__",
           [](const FieldElement& x) { return "FieldElement(" + x.str() + ")"; })
      .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
      .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
      .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return a * b; })
      .def("__truediv__",
           [](const FieldElement& a, const FieldElement& b) { return a / b; })
      .def("__neg__", [](const FieldElement& a) { return -a; })
      .def("__pow__", [](const FieldElement& a, long long n) { return a.pow(n); })
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
      .def("is_zero", &FieldElement::is_zero)
      .def_property_readonly("rank", &FieldElement::rank)
      .def("valuation",
           [](const FieldElement& x) { return group_to_py(valuation(x)); })
      .def("in_V", [](const FieldElement& x) { return in_valuation_ring(x); })
      .def("in_M", [](const FieldElement& x) { return in_maximal_ideal(x); })
      .def("is_unit", [](const FieldElement& x) { return is_unit(x); });

  m.def("parse", &parse_element, py::arg("text"), py::arg("rank"),
        "Parse an exact rational-function expression in t1..tr");

  py::class_<Cut>(m, "Cut")
      .def("__str__", &Cut::str)
      .def("__repr__", [](const Cut& c) { return "Cut(" + c.str() + ")"; })
      .def("__eq__", [](const Cut& a, const Cut& b) { return a == b; })
      .def("contains",
           [](const Cut& c, const FieldElement& x) { return c.contains(x); })
      .def("contains_value", [](const Cut& c, const py::sequence& v) {
        return c.contains(group_from_py(v));
      });

  py::class_<Classification>(m, "Classification")
      .def("__str__", &Classification::str)
      .def("__repr__", [](const Classification& c) { return c.str(); })
      .def_property_readonly("kind", &classification_kind)
      .def_property_readonly("reason", &classification_reason)
      .def_property_readonly("index",
                             [](const Classification& c) -> py::object {
                               if (!c.index) return py::none();
                               return py_big(*c.index);
                             })
      .def_property_readonly("is_member", &Classification::is_member);

  py::class_<PCSeq>(m, "Sequence")
      .def(py::init(&make_seq), py::arg("rank"), py::arg("prefix"), py::arg("u"),
           py::arg("b"),
           "Pseudo-convergent sequence: explicit prefix s_0..s_n0 plus "
           "geometric differences c_n = u*t^(n*b)")
      .def_property_readonly("rank", &PCSeq::rank)
      .def_property_readonly("is_valid", &PCSeq::is_valid)
      .def_property_readonly("validation_message",
                             [](const PCSeq& s) -> py::object {
                               if (s.is_valid()) return py::none();
                               return py::str(s.validation()->message);
                             })
      .def("term", [](const PCSeq& s, const py::int_& n) { return s.term(from_py_int(n)); })
      .def("diff", [](const PCSeq& s, const py::int_& n) { return s.diff(from_py_int(n)); })
      .def("gauge",
           [](const PCSeq& s, const py::int_& n) {
             return group_to_py(s.gauge_at(from_py_int(n)));
           })
      .def("breadth", [](const PCSeq& s) { return breadth(s); })
      .def("pseudo_limit", [](const PCSeq& s) { return pseudo_limit(s); })
      .def("is_pseudo_limit",
           [](const PCSeq& s, const FieldElement& a) { return is_pseudo_limit(s, a); })
      .def("coset_prime",
           [](const PCSeq& s, const py::int_& k) {
             return coset_prime(s, from_py_int(k)).j;
           })
      .def("classify",
           [](const PCSeq& s, const FieldElement& a) { return classify(s, a); })
      .def("classify",
           [](const PCSeq& s, const std::string& a) {
             return classify(s, parse_element(a, s.rank()));
           })
      .def("in_closure",
           [](const PCSeq& s, const FieldElement& a) { return in_closure(s, a); })
      .def("in_closure",
           [](const PCSeq& s, const std::string& a) {
             return in_closure(s, parse_element(a, s.rank()));
           })
      .def("closure_equal",
           [](const PCSeq& s, const PCSeq& o) {
             ClosureEqualResult r = closure_equal(s, o);
             return py::make_tuple(r.equal, r.certificate);
           })
      .def("hn",
           [](const PCSeq& s, const py::int_& n) {
             return basis_poly(s, from_py_int(n)).str();
           })
      .def("hn_eval",
           [](const PCSeq& s, const py::int_& n, const FieldElement& a) {
             return basis_poly(s, from_py_int(n)).eval(a);
           })
      .def("oracle",
           [](const PCSeq& s, const FieldElement& a, const py::int_& horizon) {
             ClosureOracleResult r = closure_oracle(s, a, from_py_int(horizon));
             py::object witness =
                 r.witness ? py_big(*r.witness) : py::object(py::none());
             return py::make_tuple(r.pass, witness);
           },
           py::arg("alpha"), py::arg("horizon") = 30)
      .def("expand",
           [](const PCSeq& s, const std::string& poly) {
             BasisExpansion e = expand_in_basis(s, parse_poly(poly, s.rank()));
             return e.coeffs;
           })
      .def("is_integer_valued",
           [](const PCSeq& s, const std::string& poly) {
             return is_integer_valued(s, parse_poly(poly, s.rank()));
           })
      .def("spec", [](const PCSeq& s) { return print_sequence_spec(s); })
      .def_static("from_spec", [](const std::string& text) {
        return build_sequence(parse_sequence_spec(text));
      });
}
