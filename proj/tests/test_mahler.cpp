#include <doctest.h>

#include "pgam/mahler.hpp"

using namespace pgam;

TEST_CASE("formal series arithmetic is exact") {
  FormalSeries a(5), b(5);
  a.set_coeff(1, mpq_class(1, 2));
  a.set_coeff(3, mpq_class(-2, 3));
  b.set_coeff(1, mpq_class(1, 3));
  b.set_coeff(2, mpq_class(5));
  FormalSeries sum = a.add(b);
  CHECK(sum.coeff(1) == mpq_class(5, 6));
  FormalSeries prod = a.mul(b);
  CHECK(prod.coeff(2) == mpq_class(1, 6));
  CHECK(prod.coeff(3) == mpq_class(5, 2));
  CHECK(a.substitute_sign(-1).coeff(1) == mpq_class(-1, 2));
  CHECK(a.substitute_sign(-1).coeff(3) == mpq_class(2, 3));
}

TEST_CASE("formal exponential satisfies exp(A)exp(B) = exp(A+B)") {
  FormalSeries a(8), b(8);
  a.set_coeff(1, mpq_class(1));
  a.set_coeff(3, mpq_class(1, 3));
  b.set_coeff(2, mpq_class(-1, 2));
  b.set_coeff(1, mpq_class(2, 7));
  CHECK(a.exp().mul(b.exp()) == a.add(b).exp());

  FormalSeries bad(4);
  bad.set_coeff(0, mpq_class(1));
  CHECK_THROWS_AS(bad.exp(), std::domain_error);
}

TEST_CASE("exp reproduces the classical exponential series") {
  FormalSeries x(6);
  x.set_coeff(1, mpq_class(1));
  FormalSeries e = x.exp();
  mpz_class fact = 1;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) fact *= k;
    CHECK(e.coeff(k) == mpq_class(1) / mpq_class(fact));
  }
}

TEST_CASE("mahler coefficients: anchors and small differences") {
  PrimeContext c31 = make_context(3, 1, 8);
  MahlerCoefficients m31 = mahler_coefficients(c31, 5);
  CHECK(m31.coeffs[0] == -1);  // (-1)^t
  CHECK(m31.coeffs[1] == 2);   // G_3(2) - G_3(1)

  PrimeContext c32 = make_context(3, 2, 8);
  MahlerCoefficients m32 = mahler_coefficients(c32, 0);
  CHECK(m32.coeffs[0] == 1);

  CHECK_THROWS_AS(mahler_coefficients(c31, -1), std::invalid_argument);
}

TEST_CASE("t = 1 coefficients are the Morita Mahler coefficients") {
  // Independent oracle: forward differences of G_p(k+1) computed directly.
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeContext ctx = make_context(p, 1, 8);
    const int K = 40;
    MahlerCoefficients mc = mahler_coefficients(ctx, K);
    std::vector<mpz_class> g(K + 1);
    for (int k = 0; k <= K; ++k) g[k] = gamma_p_nat(static_cast<unsigned long>(k) + 1, p);
    for (int eta = 0; eta <= K; ++eta) {
      mpz_class alpha = 0;
      mpz_class binom;
      for (int k = 0; k <= eta; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(eta),
                     static_cast<unsigned long>(k));
        mpz_class term = binom * g[k];
        if ((eta - k) % 2 != 0) term = -term;
        alpha += term;
      }
      CHECK(mc.coeffs[static_cast<std::size_t>(eta)] == alpha);
    }
  }
}

TEST_CASE("reconstruction: partial sums hit the integer values exactly") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 2}, {5, 1}}) {
    PrimeContext ctx = make_context(p, t, 8);
    const int K = 50;
    MahlerCoefficients mc = mahler_coefficients(ctx, K);
    for (int n = 0; n <= K; ++n) {
      mpz_class sum = 0;
      mpz_class binom;
      for (int eta = 0; eta <= n; ++eta) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(eta));
        sum += mc.coeffs[static_cast<std::size_t>(eta)] * binom;
      }
      CHECK(sum == gamma_q_nat(static_cast<unsigned long>(n), ctx));
    }
  }
}

TEST_CASE("binomial evaluation on Z_p") {
  PadicInt x = PadicInt::from_integer(7, 3, 5);
  CHECK(binomial_eval(x, 0).residue() == 1);

  PadicInt five = PadicInt::from_integer(5, 3, 5);
  CHECK(binomial_eval(five, 2).residue() == 10);

  // binom(1/2, 2) = -1/8 = 10 (mod 27)
  PadicInt half = PadicInt::from_rational(1, 2, 3, 3);
  PadicInt b = binomial_eval(half, 2);
  CHECK(b.residue() == 10);
  CHECK(b.precision() == 3);

  // p = 3, k = 3: v_3(3!) = 1, so one digit is lost.
  PadicInt y = PadicInt::from_integer(10, 3, 4);
  PadicInt c = binomial_eval(y, 3);
  CHECK(c.precision() == 3);
  CHECK(c.residue() == 120 % 27);

  CHECK_THROWS_AS(binomial_eval(PadicInt::from_integer(1, 3, 1), 3), precision_error);
}

TEST_CASE("mahler evaluation at integer points reproduces gamma") {
  PrimeContext c32 = make_context(3, 2, 8);
  MahlerCoefficients mc = mahler_coefficients(c32, 30);
  for (long n : {0L, 1L, 3L, 9L, 20L, 30L}) {
    PadicInt x = PadicInt::from_integer(n, 3, 18);
    PadicInt e = mahler_evaluate(x, mc, 30);
    mpz_class expect = gamma_q_nat(static_cast<unsigned long>(n), c32);
    CHECK(e.congruent(PadicInt::from_integer(expect, 3, e.precision()), e.precision()));
  }
  // K = 0 collapses to a_0 everywhere.
  PadicInt any = PadicInt::from_integer(77, 3, 8);
  CHECK(mahler_evaluate(any, mc, 0).residue() == 1);
}

TEST_CASE("partial sums at -1 approach the limit value 1") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    PrimeContext ctx = make_context(p, t, 12);
    MahlerCoefficients mc = mahler_coefficients(ctx, 100);
    PadicInt x = PadicInt::from_integer(-1, p, 12);
    PadicInt e = mahler_evaluate(x, mc, 100);
    PadicInt one = PadicInt::from_integer(1, p, e.precision());
    CHECK(e.congruent(one, std::min(e.precision(), 6)));
  }
}

TEST_CASE("delta polynomial as printed") {
  PrimeContext c31 = make_context(3, 1, 8);
  FormalSeries d31 = delta_series(c31, 6);
  // t = 1: coefficient of x^l is -(-1)^l while l < p, zero beyond.
  CHECK(d31.coeff(0) == -1);
  CHECK(d31.coeff(1) == 1);
  CHECK(d31.coeff(2) == -1);
  CHECK(d31.coeff(3) == 0);

  PrimeContext c32 = make_context(3, 2, 8);
  CHECK(delta_series(c32, 4).coeff(0) == 1);  // (-1)^t

  PrimeContext c22 = make_context(2, 2, 8);
  CHECK(delta_series(c22, 4).coeff(2) == -2);  // (-1)^2 (-1)^2 (-2)^{v_2(2!)}
}

TEST_CASE("lhs series conventions") {
  PrimeContext c31 = make_context(3, 1, 8);
  SignConvention paper{true, false, true};
  FormalSeries lp = lhs_series(c31, 6, paper);
  CHECK(lp.coeff(0) == -1);  // exp(0) * delta(0) = (-1)^t

  SignConvention classical{false, false, false};
  FormalSeries lc = lhs_series(c31, 6, classical);
  // exp(x + x^3/3)(1 + x + x^2): degree-1 coefficient 1 + 1 = 2.
  CHECK(lc.coeff(0) == 1);
  CHECK(lc.coeff(1) == 2);
}

TEST_CASE("rhs series from the coefficients") {
  PrimeContext c32 = make_context(3, 2, 8);
  MahlerCoefficients mc = mahler_coefficients(c32, 10);
  FormalSeries r = rhs_series(mc, 10);
  CHECK(r.coeff(0) == 1);  // (-1)^t a_0 = (-1)^{2t}

  PrimeContext c31 = make_context(3, 1, 8);
  MahlerCoefficients mc31 = mahler_coefficients(c31, 0);
  FormalSeries r0 = rhs_series(mc31, 0);
  CHECK(r0.coeff(0) == 1);  // (-1)^{0+1} a_0 = -(-1)

  CHECK_THROWS_AS(rhs_series(mc31, 5), std::invalid_argument);
}

TEST_CASE("generating function comparison") {
  // t = 1: the classical convention must be exact through degree 30.
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeContext ctx = make_context(p, 1, 8);
    GfReport rep = gf_compare(ctx, 30);
    CHECK(rep.classical_index >= 0);
    CHECK(rep.classical_exact);
    CHECK(rep.conventions[static_cast<std::size_t>(rep.best_index)].exact);
  }

  // t = 2: report produced, all 8 conventions present, classical flagged.
  PrimeContext c22 = make_context(2, 2, 8);
  GfReport rep = gf_compare(c22, 20);
  CHECK(rep.conventions.size() == 8);
  CHECK(rep.classical_index >= 0);
  int paper_count = 0;
  for (const auto& c : rep.conventions) paper_count += c.is_paper_verbatim ? 1 : 0;
  CHECK(paper_count == 1);

  // Degree 0 only.
  GfReport rep0 = gf_compare(c22, 0);
  CHECK(rep0.conventions.size() == 8);
}
