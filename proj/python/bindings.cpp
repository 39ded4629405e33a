#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recurseq/contfrac.hpp"
#include "recurseq/errors.hpp"
#include "recurseq/ratio_accel.hpp"
#include "recurseq/recurrence.hpp"
#include "recurseq/rootfind.hpp"

namespace py = pybind11;
using namespace recurseq;

namespace {

// Python ints and fractions.Fraction cross the boundary through their
// decimal text, which keeps arbitrary precision without touching CPython
// internals.
Integer to_integer(const py::handle& obj) {
  return parse_integer(py::str(py::int_(py::reinterpret_borrow<py::object>(obj))).cast<std::string>());
}

Rational to_rational(const py::handle& obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

py::int_ from_integer(const Integer& value) {
  return py::int_(py::module_::import("builtins").attr("int")(value.get_str()));
}

py::object from_rational(const Rational& value) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(from_integer(value.get_num()), from_integer(value.get_den()));
}

RecurrenceParams params_of(const py::handle& p, const py::handle& q) {
  return {to_integer(p), to_integer(q)};
}

py::list accel_rows(const std::vector<AccelEntry>& entries) {
  py::list out;
  for (const auto& e : entries) {
    out.append(py::make_tuple(e.index, from_rational(e.u), from_rational(e.t), from_rational(e.x)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_recurseq, m) {
  m.doc() = "Exact arithmetic for order-2 linear recurrences and their accelerations";

  auto base = py::register_exception<Error>(m, "RecurseqError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<InverseUnavailable>(m, "InverseUnavailable", base.ptr());
  py::register_exception<DegenerateRatio>(m, "DegenerateRatio", base.ptr());
  py::register_exception<DegenerateStep>(m, "DegenerateStep", base.ptr());
  py::register_exception<DegenerateConvergent>(m, "DegenerateConvergent", base.ptr());
  py::register_exception<NonRealRoots>(m, "NonRealRoots", base.ptr());
  py::register_exception<NoProgress>(m, "NoProgress", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

  m.attr("DEFAULT_MAX_INDEX") = kDefaultMaxIndex;

  m.def(
      "term",
      [](py::object p, py::object q, py::object a0, py::object a1, Index n, Index max_index) {
        LinRecSequence seq{to_integer(a0), to_integer(a1), params_of(p, q)};
        return from_integer(term(seq, n, max_index));
      },
      py::arg("p"), py::arg("q"), py::arg("a0"), py::arg("a1"), py::arg("n"),
      py::arg("max_index") = kDefaultMaxIndex, "n-th term of W(a0, a1, p, q).");

  m.def(
      "basis_ut",
      [](py::object p, py::object q, Index n) {
        BasisValues b = basis_UT(params_of(p, q), n);
        return py::make_tuple(from_rational(b.u), from_rational(b.t));
      },
      py::arg("p"), py::arg("q"), py::arg("n"), "(U_n, T_n) for any integer n.");

  m.def(
      "lucas_v",
      [](py::object p, py::object q, Index n) { return from_integer(lucas_V(params_of(p, q), n)); },
      py::arg("p"), py::arg("q"), py::arg("n"));

  m.def(
      "companion_power",
      [](py::object p, py::object q, Index n) {
        Matrix2 mat = companion_power(params_of(p, q), n);
        return py::make_tuple(py::make_tuple(from_rational(mat.e11), from_rational(mat.e12)),
                              py::make_tuple(from_rational(mat.e21), from_rational(mat.e22)));
      },
      py::arg("p"), py::arg("q"), py::arg("n"));

  m.def(
      "decimated_params",
      [](py::object p, py::object q, Index step) {
        RecurrenceParams d = decimated_params(params_of(p, q), step);
        return py::make_tuple(from_integer(d.p), from_integer(d.q));
      },
      py::arg("p"), py::arg("q"), py::arg("m"));

  m.def(
      "ratio_x",
      [](py::object p, py::object q, Index n) { return from_rational(ratio_x(params_of(p, q), n)); },
      py::arg("p"), py::arg("q"), py::arg("n"));

  m.def(
      "general_ratio_y",
      [](py::object p, py::object q, py::object a0, py::object a1, Index n) {
        LinRecSequence seq{to_integer(a0), to_integer(a1), params_of(p, q)};
        return from_rational(general_ratio_y(seq, n));
      },
      py::arg("p"), py::arg("q"), py::arg("a0"), py::arg("a1"), py::arg("n"));

  m.def(
      "shift_ratio",
      [](py::object p, py::object q, py::object x_n, py::object x_m1) {
        return from_rational(shift_ratio(params_of(p, q), to_rational(x_n), to_rational(x_m1)));
      },
      py::arg("p"), py::arg("q"), py::arg("x_n"), py::arg("x_m1"));

  m.def(
      "double_ratio",
      [](py::object p, py::object q, py::object x_n) {
        return from_rational(double_ratio(params_of(p, q), to_rational(x_n)));
      },
      py::arg("p"), py::arg("q"), py::arg("x_n"));

  m.def(
      "fibonacci_index_accel",
      [](py::object p, py::object q, py::object x_a, py::object x_b) {
        return from_rational(
            fibonacci_index_accel(params_of(p, q), to_rational(x_a), to_rational(x_b)));
      },
      py::arg("p"), py::arg("q"), py::arg("x_a"), py::arg("x_b"));

  m.def(
      "accelerate_general",
      [](py::object p, py::object q, Index i, Index j, Index s, Index t, Index count) {
        return accel_rows(accelerate_general(params_of(p, q), {i, j, s, t}, count));
      },
      py::arg("p"), py::arg("q"), py::arg("i"), py::arg("j"), py::arg("s"), py::arg("t"),
      py::arg("count"), "Rows (index, U, T, x) of the subsequence x_{g_n}, g = W(i, j, s, t).");

  m.def(
      "arithmetic_index_accel",
      [](py::object p, py::object q, Index h, Index k, Index count) {
        return accel_rows(arithmetic_index_accel(params_of(p, q), h, k, count));
      },
      py::arg("p"), py::arg("q"), py::arg("h"), py::arg("k"), py::arg("count"));

  m.def("verify_nested_fibonacci_identity",
        [](Index n) { return verify_nested_fibonacci_identity(n); }, py::arg("n"));
  m.def("verify_fkn_identity", [](Index k, Index n) { return verify_fkn_identity(k, n); },
        py::arg("k"), py::arg("n"));

  m.def(
      "secant_step",
      [](py::object a, py::object b, py::object c, py::object x_prev, py::object x_prev2) {
        QuadraticABC f{to_integer(a), to_integer(b), to_integer(c)};
        return from_rational(secant_step(f, to_rational(x_prev), to_rational(x_prev2)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x_prev"), py::arg("x_prev2"));

  m.def(
      "newton_step",
      [](py::object a, py::object b, py::object c, py::object y) {
        QuadraticABC f{to_integer(a), to_integer(b), to_integer(c)};
        return from_rational(newton_step(f, to_rational(y)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("y"));

  m.def(
      "halley_step",
      [](py::object p, py::object q, py::object y) {
        return from_rational(halley_step(QuadraticPQ{to_integer(p), to_integer(q)}, to_rational(y)));
      },
      py::arg("p"), py::arg("q"), py::arg("y"), "Halley step on t^2 - p t + q.");

  m.def(
      "householder_step",
      [](py::object p, py::object q, py::object y, unsigned d) {
        return from_rational(
            householder_step(QuadraticPQ{to_integer(p), to_integer(q)}, to_rational(y), d));
      },
      py::arg("p"), py::arg("q"), py::arg("y"), py::arg("d"));

  m.def("newton_index", &newton_index, py::arg("k"));
  m.def("halley_index", &halley_index, py::arg("k"));
  m.def("householder_index", &householder_index, py::arg("k"), py::arg("d"));
  m.def("secant_index_sequence", &secant_index_sequence, py::arg("count"));

  m.def(
      "approximate_root",
      [](py::object a, py::object b, py::object c, const std::string& method, unsigned digits) {
        QuadraticABC f{to_integer(a), to_integer(b), to_integer(c)};
        return approximate_root(f, parse_method(method), digits).decimal;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("method"), py::arg("digits"));

  m.def(
      "convergents",
      [](const std::string& text, Index count, const std::string& form) {
        RationalCF cf = RationalCF::parse(text);
        auto records = form == "integer" ? convergents_integer(cf, count)
                                         : convergents_direct(cf, count);
        py::list out;
        for (const auto& rec : records) out.append(from_rational(*rec.value));
        return out;
      },
      py::arg("cf"), py::arg("count"), py::arg("form") = "direct",
      "Convergents of a fraction given as \"a/b, c/d | period=k\".");

  m.def(
      "quad_cf_convergent",
      [](py::object a, py::object b, py::object c, Index n) {
        return from_rational(
            quad_cf_convergent(PeriodicQuadCF(to_integer(a), to_integer(b), to_integer(c)), n));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));

  m.def(
      "method_subsequence",
      [](py::object a, py::object b, py::object c, const std::string& method, Index count) {
        auto entries = method_subsequence(
            PeriodicQuadCF(to_integer(a), to_integer(b), to_integer(c)), parse_method(method), count);
        py::list out;
        for (const auto& e : entries) out.append(py::make_tuple(e.cf_index, from_rational(e.value)));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("method"), py::arg("count"));
}
