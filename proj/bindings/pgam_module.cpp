// Python bindings for the pgam core: exact factorials and gamma values,
// truncated p-adic arithmetic, Mahler tables, and the verification sweeps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pgam/gamma.hpp"
#include "pgam/mahler.hpp"
#include "pgam/padic.hpp"
#include "pgam/qfactorial.hpp"
#include "pgam/verify.hpp"

namespace py = pybind11;
using namespace pgam;

namespace {

py::int_ to_py_int(const mpz_class& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

mpz_class to_mpz(const py::int_& v) {
  return mpz_class(v.attr("__str__")().cast<std::string>());
}

py::object to_fraction(const mpq_class& q) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.get_num().get_str()) / fraction(q.get_den().get_str());
}

FactorialVariant parse_variant(const std::string& name) {
  if (name == "qskip") return FactorialVariant::QSkip;
  if (name == "coprime") return FactorialVariant::Coprime;
  throw std::invalid_argument("variant must be 'qskip' or 'coprime'");
}

py::dict report_to_dict(const verify::Report& rep) {
  auto loads = py::module_::import("json").attr("loads");
  return loads(rep.to_json().dump());
}

}  // namespace

PYBIND11_MODULE(_pgam, m) {
  m.doc() = "exact q-adic factorials and the generalized p-adic gamma function";

  py::register_exception<precision_error>(m, "PrecisionError", PyExc_ArithmeticError);

  py::class_<PrimeContext>(m, "Context")
      .def(py::init<std::uint64_t, unsigned, int>(), py::arg("p"), py::arg("t"),
           py::arg("precision") = 12)
      .def_readonly("p", &PrimeContext::p)
      .def_readonly("t", &PrimeContext::t)
      .def_property_readonly("q", [](const PrimeContext& c) { return to_py_int(c.q); })
      .def_readonly("default_precision", &PrimeContext::default_precision)
      .def("__repr__", [](const PrimeContext& c) {
        return "Context(p=" + std::to_string(c.p) + ", t=" + std::to_string(c.t) + ")";
      });

  py::class_<PadicInt>(m, "PadicInt")
      .def(py::init([](std::uint64_t p, int precision, const py::int_& residue) {
             return PadicInt(p, precision, to_mpz(residue));
           }),
           py::arg("p"), py::arg("precision"), py::arg("residue"))
      .def_static(
          "from_integer",
          [](const py::int_& z, std::uint64_t p, int precision) {
            return PadicInt::from_integer(to_mpz(z), p, precision);
          },
          py::arg("z"), py::arg("p"), py::arg("precision"))
      .def_static(
          "from_rational",
          [](const py::int_& a, const py::int_& b, std::uint64_t p, int precision) {
            return PadicInt::from_rational(to_mpz(a), to_mpz(b), p, precision);
          },
          py::arg("a"), py::arg("b"), py::arg("p"), py::arg("precision"))
      .def_property_readonly("p", &PadicInt::prime)
      .def_property_readonly("precision", &PadicInt::precision)
      .def_property_readonly("residue", [](const PadicInt& x) { return to_py_int(x.residue()); })
      .def("valuation",
           [](const PadicInt& x) {
             Valuation v = x.valuation();
             return py::make_tuple(v.v, v.exact);
           })
      .def("digits",
           [](const PadicInt& x) {
             DigitExpansion d = x.digits();
             py::list out;
             for (auto dig : d.digits) out.append(dig);
             return out;
           })
      .def("h_ell", &PadicInt::h_ell, py::arg("ell"))
      .def("unit_inverse", &PadicInt::unit_inverse)
      .def("unit_pow", &PadicInt::unit_pow, py::arg("w"))
      .def("with_precision", &PadicInt::with_precision, py::arg("precision"))
      .def("congruent", &PadicInt::congruent, py::arg("other"), py::arg("digits"))
      .def("__add__", &PadicInt::add)
      .def("__sub__", &PadicInt::sub)
      .def("__mul__", &PadicInt::mul)
      .def("__neg__", &PadicInt::negate)
      .def("__eq__", &PadicInt::operator==)
      .def("__str__", &PadicInt::str)
      .def("__repr__", [](const PadicInt& x) { return "PadicInt(" + x.str() + ")"; });

  m.def("is_prime", &is_prime_u64, py::arg("n"));

  m.def(
      "factorial_p",
      [](unsigned long n, std::uint64_t p) { return to_py_int(factorial_p(n, p)); },
      py::arg("n"), py::arg("p"));

  m.def(
      "factorial_q",
      [](unsigned long n, std::uint64_t p, unsigned t, const std::string& variant) {
        PrimeContext ctx(p, t, 1);
        return to_py_int(factorial_q(n, ctx, parse_variant(variant)));
      },
      py::arg("n"), py::arg("p"), py::arg("t"), py::arg("variant") = "qskip");

  m.def(
      "gamma_p_nat", [](unsigned long n, std::uint64_t p) { return to_py_int(gamma_p_nat(n, p)); },
      "Exact G_p(n) for n >= 0", py::arg("n"), py::arg("p"));

  m.def(
      "gamma_q_nat",
      [](unsigned long n, std::uint64_t p, unsigned t) {
        PrimeContext ctx(p, t, 1);
        return to_py_int(gamma_q_nat(n, ctx));
      },
      "Exact G_q(n+1) for n >= 0", py::arg("n"), py::arg("p"), py::arg("t"));

  m.def(
      "gamma_p", [](const PadicInt& x) { return gamma_p(x).value; },
      "G_p(x) at the precision of x", py::arg("x"));

  m.def(
      "gamma_q",
      [](const PadicInt& x, unsigned t) {
        PrimeContext ctx(x.prime(), t, x.precision());
        return gamma_q(x, ctx).value;
      },
      "G_q(x+1) at precision N - t + 1", py::arg("x"), py::arg("t"));

  m.def(
      "gamma_q_at",
      [](const PadicInt& y, unsigned t) {
        PrimeContext ctx(y.prime(), t, y.precision());
        return gamma_q_at(y, ctx).value;
      },
      "G_q(y) at precision N - t + 1", py::arg("y"), py::arg("t"));

  m.def(
      "exponents",
      [](unsigned long n, std::uint64_t p, unsigned t) {
        PrimeContext ctx(p, t, 1);
        ExponentPair e = exponents(n, ctx);
        return py::make_tuple(to_py_int(e.A), to_py_int(e.B));
      },
      "(A_n, B_n) of the factorial form of G_q(n+1)", py::arg("n"), py::arg("p"), py::arg("t"));

  m.def(
      "ota_gamma",
      [](unsigned long n, std::uint64_t p, unsigned t) {
        PrimeContext ctx(p, t, 1);
        return to_fraction(ota_gamma(n, ctx));
      },
      py::arg("n"), py::arg("p"), py::arg("t"));

  m.def(
      "residue_rep",
      [](const PadicInt& x, unsigned t) {
        PrimeContext ctx(x.prime(), t, x.precision());
        return to_py_int(residue_rep(x, ctx));
      },
      py::arg("x"), py::arg("t"));

  m.def(
      "wilson_check",
      [](const py::int_& a, unsigned s, std::uint64_t p, unsigned t) {
        PrimeContext ctx(p, t, 1);
        WilsonResult res = wilson_check(to_mpz(a), s, ctx);
        py::dict out;
        out["verdict"] = res.verdict == WilsonVerdict::HoldsMinusOne  ? "holds_minus_one"
                         : res.verdict == WilsonVerdict::HoldsPlusOne ? "holds_plus_one"
                                                                      : "fails";
        out["residue"] = to_py_int(res.residue);
        return out;
      },
      py::arg("a"), py::arg("s"), py::arg("p"), py::arg("t"));

  m.def(
      "mahler_coefficients",
      [](std::uint64_t p, unsigned t, int K) {
        PrimeContext ctx(p, t, 1);
        MahlerCoefficients mc = mahler_coefficients(ctx, K);
        py::list coeffs, valuations;
        for (int eta = 0; eta <= K; ++eta) {
          coeffs.append(to_py_int(mc.coeffs[static_cast<std::size_t>(eta)]));
          const auto& v = mc.valuations[static_cast<std::size_t>(eta)];
          if (v) {
            valuations.append(*v);
          } else {
            valuations.append(py::none());
          }
        }
        return py::make_tuple(coeffs, valuations);
      },
      "(coefficients a_eta, valuations v_p(a_eta)) of the binomial expansion of G_q(x+1)",
      py::arg("p"), py::arg("t"), py::arg("K"));

  m.def(
      "mahler_evaluate",
      [](const PadicInt& x, unsigned t, int K) {
        PrimeContext ctx(x.prime(), t, x.precision());
        MahlerCoefficients mc = mahler_coefficients(ctx, K);
        return mahler_evaluate(x, mc, K);
      },
      py::arg("x"), py::arg("t"), py::arg("K"));

  m.def(
      "gf_compare",
      [](std::uint64_t p, unsigned t, int D) {
        PrimeContext ctx(p, t, 1);
        GfReport rep = gf_compare(ctx, D);
        py::list conventions;
        for (const auto& c : rep.conventions) {
          py::dict cd;
          cd["delta_negated_x"] = c.conv.delta_negated_x;
          cd["exp_negated_x"] = c.conv.exp_negated_x;
          cd["t_sign_in_delta"] = c.conv.t_sign_in_delta;
          cd["exact"] = c.exact;
          cd["first_mismatch"] = c.first_mismatch;
          cd["is_classical"] = c.is_classical;
          cd["is_paper_verbatim"] = c.is_paper_verbatim;
          conventions.append(cd);
        }
        py::dict out;
        out["p"] = rep.p;
        out["t"] = rep.t;
        out["degree"] = rep.degree;
        out["conventions"] = conventions;
        out["best_index"] = rep.best_index;
        out["classical_index"] = rep.classical_index;
        out["classical_exact"] = rep.classical_exact;
        return out;
      },
      py::arg("p"), py::arg("t"), py::arg("degree"));

  // Verification sweeps with their acceptance-grid defaults; contexts is a
  // "p:t,p:t" string, empty for the default grid.
  m.def(
      "verify",
      [](const std::string& suite, const std::string& contexts, std::uint64_t seed) {
        using namespace verify;
        Report rep;
        if (suite == "wilson") {
          rep = verify_wilson({});
        } else if (suite == "ratio") {
          rep = verify_ratio({});
        } else if (suite == "ota") {
          OtaOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          rep = verify_ota(opt);
        } else if (suite == "closed") {
          ClosedOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          rep = verify_closed(opt);
        } else if (suite == "functional") {
          FunctionalOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          opt.seed = seed;
          rep = verify_functional(opt);
        } else if (suite == "complement") {
          ComplementOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          opt.seed = seed;
          rep = verify_complement(opt);
        } else if (suite == "gauss-legendre") {
          GaussLegendreOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          opt.seed = seed;
          rep = verify_gauss_legendre(opt);
        } else if (suite == "binomial-ratio") {
          BinomialRatioOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          rep = verify_binomial_ratio(opt);
        } else if (suite == "mahler") {
          MahlerOptions opt;
          if (!contexts.empty()) opt.contexts = parse_contexts(contexts);
          opt.seed = seed;
          rep = verify_mahler(opt);
        } else if (suite == "gf") {
          rep = verify_gf({});
        } else {
          throw std::invalid_argument("unknown suite: " + suite);
        }
        return report_to_dict(rep);
      },
      py::arg("suite"), py::arg("contexts") = "", py::arg("seed") = 0);
}
