#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfk/bifurcation.hpp"
#include "cfk/cascades.hpp"
#include "cfk/errors.hpp"
#include "cfk/lamination.hpp"
#include "cfk/matching.hpp"
#include "cfk/minkowski.hpp"
#include "cfk/spectra.hpp"
#include "cfk/univoque.hpp"

namespace py = pybind11;
using namespace cfk;

namespace {

py::object fraction(const BigRational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_fraction_string(q));
}

BigRational rational(const py::object& x) {
  return parse_rational(py::str(x).cast<std::string>());
}

// Strings of the form 0.<bits> or containing a period are binary
// expansions; anything else is read as a rational.
BinaryExpansion binary(const py::object& x) {
  std::string s = py::str(x).cast<std::string>();
  if (s.find('(') != std::string::npos || (s.rfind("0.", 0) == 0 && s.find_first_not_of("01.") == std::string::npos))
    return BinaryExpansion::parse(s);
  return BinaryExpansion::from_rational(parse_rational(s));
}

CfExpansion cf(const py::object& x) {
  std::string s = py::str(x).cast<std::string>();
  if (!s.empty() && s.front() == '[') return CfExpansion::parse(s);
  return CfExpansion::from_rational(parse_rational(s));
}

py::tuple pair(const Enclosure& e) { return py::make_tuple(fraction(e.lo), fraction(e.hi)); }

py::dict gap_dict(const IntervalGap& g) {
  py::dict d;
  d["kind"] = to_string(g.kind);
  d["depth"] = g.depth;
  d["pseudocenter"] = fraction(g.pseudocenter);
  d["left"] = to_string(g.left);
  d["right"] = to_string(g.right);
  return d;
}

ECriterion criterion(const std::string& name) {
  if (name == "gauss" || name == "b") return ECriterion::gauss;
  if (name == "farey" || name == "c") return ECriterion::farey;
  if (name == "farey_psi" || name == "d") return ECriterion::farey_psi;
  throw ParseError("unknown criterion: " + name);
}

BigRational width(int digits) { return pow10_inverse(digits); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic on the continued-fraction and kneading bifurcation sets";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("cf_canonical", [](const py::object& x) { return cf(x).to_string(); });
  m.def("binary_canonical", [](const py::object& x) { return binary(x).to_string(); });
  m.def("cf_value", [](const py::object& x) { return to_string(cf_value(cf(x))); });
  m.def("question_mark", [](const py::object& x) { return question_mark(cf(x)).to_string(); });
  m.def("question_mark_inv", [](const py::object& b) { return question_mark_inv(binary(b)).to_string(); });
  m.def("phi", [](const py::object& x) { return fraction(phi(cf(x)).to_rational()); });
  m.def("phi_inv", [](const py::object& b) { return phi_inv(binary(b)).to_string(); });

  m.def("lambda_member", [](const py::object& b) { return lambda_member(binary(b)); });
  m.def("gamma_member", [](const py::object& b) { return gamma_member(binary(b)); });
  m.def("e_member", [](const py::object& x, const std::string& c) { return e_member(cf(x), criterion(c)); },
        py::arg("x"), py::arg("criterion") = "gauss");
  m.def("quadratic_interval", [](const py::object& r) { return gap_dict(quadratic_interval(rational(r))); });
  m.def("dyadic_interval", [](const py::object& d) { return gap_dict(dyadic_interval(rational(d))); });
  m.def("binary_pseudocenter",
        [](const py::object& a, const py::object& b) { return fraction(binary_pseudocenter(binary(a), binary(b))); });
  m.def("is_maximal", [](const py::object& r) { return is_maximal(rational(r)); });
  m.def("bisect_enumerate", [](const std::string& space, int depth) {
    if (space != "lambda" && space != "e") throw ParseError("space must be lambda or e");
    py::list out;
    for (const auto& g : bisect_enumerate(space == "lambda" ? Space::lambda : Space::e, depth)) out.append(gap_dict(g));
    return out;
  });
  m.def("classify_e_point", [](const py::object& x) { return to_string(classify_e_point(cf(x))); });

  m.def("matching_exponents", [](const py::object& r) {
    auto e = matching_exponents(rational(r));
    return py::make_tuple(e.N, e.M);
  });
  m.def("talpha_step", [](const py::object& a, const py::object& x) {
    return fraction(talpha_step(rational(a), rational(x)));
  });
  m.def("verify_matching", [](const py::object& r, const py::object& alpha) {
    auto res = verify_matching(rational(r), QuadraticSurd(rational(alpha)));
    py::dict d;
    d["N"] = res.exponents.N;
    d["M"] = res.exponents.M;
    d["holds"] = res.holds;
    d["steps"] = py::make_tuple(res.steps.first, res.steps.second);
    return d;
  });

  m.def("delta", [](const std::string& eta) { return word_string(delta(parse_word(eta))); });
  m.def("tau_j", [](const std::string& eta, unsigned j) { return fraction(tau_j(parse_word(eta), j)); });
  m.def("d_j", [](const std::string& eta, unsigned j) { return fraction(d_j(parse_word(eta), j)); });
  m.def("xi_eval", [](const py::object& z, int digits) { return pair(xi_eval(rational(z), width(digits))); },
        py::arg("z"), py::arg("digits") = 30);
  m.def("tau_infinity", [](const std::string& eta, int digits) { return pair(tau_infinity(parse_word(eta), width(digits))); },
        py::arg("eta"), py::arg("digits") = 30);
  m.def("thue_morse", [](std::uint64_t n) { return static_cast<int>(thue_morse(n)); });
  m.def("cf_cascade", [](const py::object& r, unsigned n, int digits) {
    auto c = cf_cascade(rational(r), n, width(digits));
    py::dict d;
    py::list alphas;
    for (const auto& a : c.alpha_cf) alphas.append(a.to_string());
    d["alpha"] = alphas;
    d["alpha_infinity"] = pair(c.alpha_infinity);
    return d;
  }, py::arg("r"), py::arg("n"), py::arg("digits") = 30);

  m.def("multinacci_root", [](unsigned K, int digits) { return pair(multinacci_root(K, width(digits))); },
        py::arg("K"), py::arg("digits") = 30);
  m.def("dim_CK", [](unsigned K, int digits) { return pair(dim_CK(K, width(digits))); },
        py::arg("K"), py::arg("digits") = 30);
  m.def("count_aK", [](unsigned K, unsigned n) { return py::int_(py::str(count_aK(K, n).get_str())); });
  m.def("e_side_reference", &e_side_reference);

  m.def("is_admissible", [](const py::object& c) { return is_admissible(binary(c)); });
  m.def("univoque_q", [](const py::object& seq, int digits) {
    std::string s = py::str(seq).cast<std::string>();
    auto c = s == "thue-morse" ? AdmissibleSequence::shifted_thue_morse() : AdmissibleSequence::from_expansion(binary(seq));
    return pair(univoque_q(c, width(digits)).q);
  }, py::arg("seq"), py::arg("digits") = 30);

  m.def("leaf_length", [](const py::object& a, const py::object& b) { return fraction(leaf_length(Leaf(rational(a), rational(b)))); });
  m.def("minor_leaf_from_lambda", [](const py::object& x) {
    Leaf L = minor_leaf_from_lambda(binary(x));
    return py::make_tuple(fraction(L.a), fraction(L.b));
  });
  m.def("is_minor_leaf", [](const py::object& a, const py::object& b) { return is_minor_leaf(Leaf(rational(a), rational(b))); });
  m.def("is_real_minor_leaf",
        [](const py::object& a, const py::object& b) { return is_real_minor_leaf(Leaf(rational(a), rational(b))); });
  m.def("real_ray_member", [](const py::object& t) { return real_ray_member(rational(t)); });
}
