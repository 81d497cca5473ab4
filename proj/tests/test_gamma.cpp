#include <doctest.h>

#include <random>

#include "pgam/gamma.hpp"

using namespace pgam;

TEST_CASE("morita anchors") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    CHECK(gamma_p_nat(0, p) == 1);
    CHECK(gamma_p_nat(1, p) == -1);
    CHECK(gamma_p_nat(2, p) == 1);
  }
  CHECK(gamma_p_nat(4, 2) == 3);
  CHECK(gamma_p_nat(4, 3) == 2);
}

TEST_CASE("gamma_p_nat matches the shifted factorial") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned long n = 0; n <= 60; ++n) {
      mpz_class expect = factorial_p(n, p);
      if (n % 2 == 0) expect = -expect;  // (-1)^{n+1}
      CHECK(gamma_p_nat(n + 1, p) == expect);
    }
  }
}

TEST_CASE("gamma_p on truncated arguments") {
  PadicInt four = PadicInt::from_integer(4, 3, 5);
  CHECK(gamma_p(four).value.residue() == 2);

  // 1/2 = 5 (mod 9); G_3(5) = -8 = 1 (mod 9)
  PadicInt half = PadicInt::from_rational(1, 2, 3, 2);
  CHECK(gamma_p(half).value.residue() == 1);

  PadicInt zero = PadicInt::from_integer(0, 3, 4);
  CHECK(gamma_p(zero).value.residue() == 1);

  CHECK_THROWS_AS(gamma_p(PadicInt::from_integer(1, 2, 2)), precision_error);
}

TEST_CASE("gamma_p respects congruences of arguments (odd p and p = 2)") {
  // m = n (mod p^s) forces G_p(m) = G_p(n) (mod p^s); this is what makes the
  // representative evaluation sound.
  for (std::uint64_t p : {3, 5}) {
    for (unsigned s = 1; s <= 3; ++s) {
      mpz_class ps = pow_p(p, s);
      for (unsigned long n = 0; n <= 30; ++n) {
        mpz_class lhs = gamma_p_nat(n, p) - gamma_p_nat(n + ps.get_ui(), p);
        CHECK(mpz_divisible_p(lhs.get_mpz_t(), ps.get_mpz_t()));
      }
    }
  }
  for (unsigned s = 3; s <= 5; ++s) {
    mpz_class ps = pow_p(2, s);
    for (unsigned long n = 0; n <= 30; ++n) {
      mpz_class lhs = gamma_p_nat(n, 2) - gamma_p_nat(n + ps.get_ui(), 2);
      CHECK(mpz_divisible_p(lhs.get_mpz_t(), ps.get_mpz_t()));
    }
  }
}

TEST_CASE("gamma_p_mod agrees with the exact values") {
  for (std::uint64_t p : {2, 3, 5}) {
    int N = (p == 2) ? 6 : 4;
    mpz_class modulus = pow_p(p, static_cast<unsigned>(N));
    for (unsigned long m = 0; m <= 40; ++m) {
      mpz_class expect;
      mpz_mod(expect.get_mpz_t(), gamma_p_nat(m, p).get_mpz_t(), modulus.get_mpz_t());
      CHECK(gamma_p_mod(m, p, N) == expect);
    }
  }
}

TEST_CASE("gamma_p closed forms") {
  GammaPClosedReport r1 = gamma_p_closed(3, 3);
  CHECK(r1.all_equal);
  CHECK(r1.quotient_form == 2);

  GammaPClosedReport r0 = gamma_p_closed(0, 5);
  CHECK(r0.all_equal);
  CHECK(r0.quotient_form == -1);

  // n = p^2 exercises the prime-power special case of the same form.
  CHECK(gamma_p_closed(9, 3).all_equal);
  CHECK(gamma_p_closed(25, 5).all_equal);
  for (unsigned long n = 0; n <= 50; ++n) {
    CHECK(gamma_p_closed(n, 2).all_equal);
    CHECK(gamma_p_closed(n, 3).all_equal);
  }
}

TEST_CASE("factorial reassembled from gamma values") {
  CHECK(factorial_via_gamma(1, 2) == 1);
  CHECK(factorial_via_gamma(5, 2) == 120);
  CHECK(factorial_via_gamma(9, 3) == 362880);
  mpz_class fact = 1;
  for (unsigned long n = 1; n <= 40; ++n) {
    fact *= n;
    CHECK(factorial_via_gamma(n, 2) == fact);
    CHECK(factorial_via_gamma(n, 5) == fact);
  }
}

TEST_CASE("gamma_q_nat worked values") {
  PrimeContext c32 = make_context(3, 2, 8);
  CHECK(gamma_q_nat(3, c32) == 2);  // G_9(4) = G_3(4) G_3(2) = 2

  PrimeContext c22 = make_context(2, 2, 8);
  CHECK(gamma_q_nat(3, c22) == 3);  // G_4(4) = G_2(4) G_2(2) = 3
  CHECK(gamma_q_nat(5, c22) == -15);

  // t = 1 collapses to the Morita function.
  PrimeContext c31 = make_context(3, 1, 8);
  for (unsigned long n = 0; n <= 200; ++n) {
    CHECK(gamma_q_nat(n, c31) == gamma_p_nat(n + 1, 3));
  }
}

TEST_CASE("gamma_q on truncated arguments") {
  PrimeContext c32 = make_context(3, 2, 8);
  GammaValue g = gamma_q(PadicInt::from_integer(3, 3, 8), c32);
  CHECK(g.value.precision() == 7);
  CHECK(g.value.residue() == 2);

  GammaValue g0 = gamma_q(PadicInt::from_integer(-1, 3, 8), c32);
  CHECK(g0.value.residue() == 1);

  CHECK_THROWS_AS(gamma_q(PadicInt::from_integer(1, 3, 1), c32), precision_error);

  PrimeContext c23 = make_context(2, 3, 8);
  CHECK_THROWS_AS(gamma_q(PadicInt::from_integer(1, 2, 4), c23), precision_error);
  CHECK(gamma_q(PadicInt::from_integer(5, 2, 8), c23).value.precision() == 6);
}

TEST_CASE("gamma_q agrees with the exact integers on residues") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
    PrimeContext ctx = make_context(p, t, 10);
    for (unsigned long n = 0; n <= 60; ++n) {
      GammaValue g = gamma_q(PadicInt::from_integer(n, p, 10), ctx);
      mpz_class expect = gamma_q_nat(n, ctx);
      PadicInt embedded = PadicInt::from_integer(expect, p, g.value.precision());
      CHECK(g.value == embedded);
    }
  }
}

TEST_CASE("gamma values are units") {
  std::mt19937_64 eng(5);
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 2}, {5, 1}}) {
    PrimeContext ctx = make_context(p, t, 9);
    for (int trial = 0; trial < 25; ++trial) {
      PadicInt x(p, 9, mpz_class(static_cast<unsigned long>(eng())));
      GammaValue g = gamma_q(x, ctx);
      Valuation v = g.value.valuation();
      CHECK(v.exact);
      CHECK(v.v == 0);
    }
  }
}

TEST_CASE("exponent pairs and the factorial form") {
  PrimeContext c32 = make_context(3, 2, 8);
  ExponentPair e3 = exponents(3, c32);
  CHECK(e3.A == 6);
  CHECK(e3.B == 1);
  CHECK(ota_gamma(3, c32) == 2);

  PrimeContext c22 = make_context(2, 2, 8);
  ExponentPair e5 = exponents(5, c22);
  CHECK(e5.A == 9);
  CHECK(e5.B == 1);
  CHECK(ota_gamma(5, c22) == -15);

  ExponentPair e0 = exponents(0, c32);
  CHECK(e0.A == 2);
  CHECK(e0.B == 0);
  CHECK(ota_gamma(0, c32) == 1);  // (-1)^t with t = 2

  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 2}}) {
    PrimeContext ctx = make_context(p, t, 8);
    for (unsigned long n = 0; n <= 150; ++n) {
      CHECK(ota_gamma(n, ctx) == mpq_class(gamma_q_nat(n, ctx)));
    }
  }
}

TEST_CASE("closed forms for gamma_q") {
  PrimeContext c32 = make_context(3, 2, 8);
  CHECK(gamma_q_closed(3, c32) == 2);
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 2}, {5, 1}}) {
    PrimeContext ctx = make_context(p, t, 8);
    for (unsigned long n = 0; n <= 120; ++n) {
      mpq_class ref(gamma_q_nat(n, ctx));
      CHECK(gamma_q_closed(n, ctx, ClosedCase::General) == ref);
      CHECK(gamma_q_closed(n, ctx, ClosedCase::MqLambda) == ref);
    }
    for (unsigned s = 1; s <= 2; ++s) {
      unsigned long qs = pow_p(ctx.p, ctx.t * s).get_ui();
      CHECK(gamma_q_closed(qs - 1, ctx, ClosedCase::QPowSMinus1) ==
            mpq_class(gamma_q_nat(qs - 1, ctx)));
      CHECK(gamma_q_closed(qs, ctx, ClosedCase::QPowS) == mpq_class(gamma_q_nat(qs, ctx)));
    }
  }
  CHECK_THROWS_AS(gamma_q_closed(5, c32, ClosedCase::QPowS), std::invalid_argument);
  CHECK_THROWS_AS(gamma_q_closed(5, c32, ClosedCase::QPowSMinus1), std::invalid_argument);
}

TEST_CASE("prime-power exponent relations: B matches, A differs by t") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    PrimeContext ctx = make_context(p, t, 8);
    for (unsigned s = 1; s <= 2; ++s) {
      unsigned long qs = pow_p(ctx.p, ctx.t * s).get_ui();
      ExponentPair lo = exponents(qs - 1, ctx);
      ExponentPair hi = exponents(qs, ctx);
      CHECK(hi.B == lo.B);
      CHECK(hi.A == lo.A + t);  // "+1" only at t = 1
      ExponentPair clo = exponents_q_pow_s_minus_1(s, ctx);
      ExponentPair chi = exponents_q_pow_s(s, ctx);
      CHECK(clo.A == lo.A);
      CHECK(clo.B == lo.B);
      CHECK(chi.A == hi.A);
      CHECK(chi.B == hi.B);
    }
  }
}

TEST_CASE("functional equation steps") {
  PrimeContext c31 = make_context(3, 1, 8);
  PadicInt one = PadicInt::from_integer(1, 3, 8);
  FunctionalStepResult s1 = functional_step(one, c31);
  CHECK(s1.branch == FunctionalBranch::UnitDigitShift);
  CHECK(s1.k == 0);
  CHECK(s1.predicted.residue() == 1);  // G_3(2) = 1

  PadicInt three = PadicInt::from_integer(3, 3, 8);
  FunctionalStepResult s2 = functional_step(three, c31);
  CHECK(s2.branch == FunctionalBranch::QMultiple);
  CHECK(s2.predicted.congruent(PadicInt::from_integer(2, 3, s2.predicted.precision()),
                               s2.predicted.precision()));  // G_3(4) = 2

  PrimeContext c22 = make_context(2, 2, 8);
  PadicInt two = PadicInt::from_integer(2, 2, 8);
  FunctionalStepResult s3 = functional_step(two, c22);
  CHECK(s3.branch == FunctionalBranch::UnitDigitShift);
  CHECK(s3.k == 1);
  PadicInt direct = gamma_q(two, c22).value;
  int shared = std::min(s3.predicted.precision(), direct.precision());
  CHECK(s3.predicted.congruent(direct, shared));
}

TEST_CASE("complement formula instances") {
  PrimeContext c31 = make_context(3, 1, 8);
  ComplementResult r1 = complement(PadicInt::from_integer(1, 3, 8), c31);
  CHECK(r1.rhs_sign == -1);
  CHECK(r1.equal);

  PrimeContext c32 = make_context(3, 2, 8);
  ComplementResult r2 = complement(PadicInt::from_rational(1, 2, 3, 8), c32);
  CHECK(r2.rhs_sign == 1);  // (-1)^{t-1+R(1/2)} = (-1)^{1+5}
  CHECK(r2.equal);

  PrimeContext c22 = make_context(2, 2, 8);
  ComplementResult r3 = complement(PadicInt::from_integer(1, 2, 8), c22);
  CHECK(r3.branch == 2);  // unit branch
  CHECK(r3.equal);
  ComplementResult r4 = complement(PadicInt::from_integer(2, 2, 8), c22);
  CHECK(r4.branch == 1);  // 0 < v < t
  CHECK(r4.equal);
  ComplementResult r5 = complement(PadicInt::from_integer(4, 2, 8), c22);
  CHECK(r5.branch == 2);  // multiple of q
  CHECK(r5.equal);
}

TEST_CASE("half-value squared follows the complement sign, not (-1)^t") {
  // (-1)^{t-1+(q+1)/2} equals (-1)^t only when q = 1 (mod 4); q = 3 (mod 4)
  // gives the opposite sign, e.g. G_3(1/2)^2 = +1.
  PrimeContext c31 = make_context(3, 1, 8);
  PadicInt half31 = PadicInt::from_rational(1, 2, 3, 8);
  PadicInt sq31 = gamma_q_at(half31, c31).value;
  sq31 = sq31.mul(sq31);
  CHECK(sq31.congruent(PadicInt::from_integer(1, 3, sq31.precision()), sq31.precision()));

  PrimeContext c51 = make_context(5, 1, 8);
  PadicInt half51 = PadicInt::from_rational(1, 2, 5, 8);
  PadicInt sq51 = gamma_q_at(half51, c51).value;
  sq51 = sq51.mul(sq51);
  CHECK(sq51.congruent(PadicInt::from_integer(-1, 5, sq51.precision()), sq51.precision()));

  PrimeContext c32 = make_context(3, 2, 8);
  PadicInt half32 = PadicInt::from_rational(1, 2, 3, 8);
  PadicInt sq32 = gamma_q_at(half32, c32).value;
  sq32 = sq32.mul(sq32);
  CHECK(sq32.congruent(PadicInt::from_integer(1, 3, sq32.precision()), sq32.precision()));
}

TEST_CASE("gauss-legendre multiplication") {
  PrimeContext c31 = make_context(3, 1, 9);

  // x = 1 telescopes to 1 on both sides.
  GaussLegendreResult r1 = gauss_legendre(PadicInt::from_integer(1, 3, 9), 2, c31);
  CHECK(r1.equal);
  CHECK(r1.lhs.residue() == 1);
  CHECK(r1.rhs.residue() == 1);

  // x = q + 1: R = 1, R' = 1, so the right side is N^{q-1} = 4.
  GaussLegendreResult r2 = gauss_legendre(PadicInt::from_integer(4, 3, 9), 2, c31);
  CHECK(r2.equal);
  CHECK(r2.rhs.congruent(PadicInt::from_integer(4, 3, r2.rhs.precision()),
                         r2.rhs.precision()));

  // x = 0 goes through the G_q(0) = 1 factors and still matches.
  GaussLegendreResult r3 = gauss_legendre(PadicInt::from_integer(0, 3, 9), 2, c31);
  CHECK(r3.equal);
  CHECK(r3.lhs.congruent(PadicInt::from_integer(1, 3, r3.lhs.precision()), r3.lhs.precision()));

  CHECK_THROWS_AS(gauss_legendre(PadicInt::from_integer(1, 3, 9), 3, c31),
                  std::invalid_argument);

  // p = 2 integer path.
  PrimeContext c21 = make_context(2, 1, 9);
  for (long n = 0; n <= 12; ++n) {
    GaussLegendreResult r = gauss_legendre(mpz_class(n), 3, c21, 9);
    CHECK(r.equal);
  }
  PrimeContext c22 = make_context(2, 2, 9);
  for (long n = 0; n <= 12; ++n) {
    CHECK(gauss_legendre(mpz_class(n), 5, c22, 9).equal);
  }
  CHECK_THROWS_AS(gauss_legendre(PadicInt::from_integer(1, 2, 9), 3, c21),
                  std::invalid_argument);
}

TEST_CASE("roots product is a fourth root of unity") {
  PrimeContext c31 = make_context(3, 1, 8);
  RootsProductResult r1 = roots_product(2, c31, 8);
  CHECK(r1.fourth_power_is_one);
  // N = 2 leaves the single factor G_3(1/2), whose square is +1 here.
  PadicInt sq = r1.z.mul(r1.z);
  CHECK(sq.congruent(PadicInt::from_integer(1, 3, sq.precision()), sq.precision()));

  PrimeContext c51 = make_context(5, 1, 8);
  CHECK(roots_product(3, c51, 8).fourth_power_is_one);
  CHECK(roots_product(4, c51, 8).fourth_power_is_one);

  CHECK_THROWS_AS(roots_product(2, make_context(2, 1, 8), 8), std::invalid_argument);
}

TEST_CASE("binomial ratio identity") {
  PrimeContext c22 = make_context(2, 2, 8);
  BinomialRatioResult r = binomial_ratio(1, 2, 1, c22, 8);
  CHECK(r.lhs == 2);
  CHECK(r.rhs_first == 2);
  CHECK(r.first_equal);
  CHECK(r.second_equal);
  CHECK(r.n_r == 2);
  CHECK(r.m_r == 1);

  PrimeContext c32 = make_context(3, 2, 8);
  BinomialRatioResult r2 = binomial_ratio(2, 5, 2, c32, 8);
  CHECK(r2.first_equal);
  CHECK(r2.second_equal);

  CHECK_THROWS_AS(binomial_ratio(2, 1, 1, c32, 8), std::invalid_argument);
  CHECK_THROWS_AS(binomial_ratio(1, 8, 1, c32, 8), std::invalid_argument);
}

TEST_CASE("lipschitz probe") {
  PrimeContext c31 = make_context(3, 1, 8);
  PadicInt x = PadicInt::from_integer(1, 3, 8);
  PadicInt y = PadicInt::from_integer(2, 3, 8);
  LipschitzReport r1 = lipschitz_probe(x, y, c31);
  CHECK(r1.upper_clause_applies);
  CHECK(r1.upper_clause_holds);

  PadicInt n = PadicInt::from_integer(4, 3, 8);
  PadicInt ns = PadicInt::from_integer(4 + 9, 3, 8);
  LipschitzReport r2 = lipschitz_probe(n, ns, c31);
  CHECK(r2.input_distance == mpq_class(1, 9));
  CHECK_FALSE(r2.upper_clause_applies);

  LipschitzReport r3 = lipschitz_probe(x, x, c31);
  CHECK(r3.input_distance == 0);
  CHECK(r3.gamma_distance == 0);
}

TEST_CASE("gamma_p_table matches pointwise evaluation") {
  for (std::uint64_t p : {2, 3, 5}) {
    auto table = gamma_p_table(60, p);
    for (unsigned long n = 0; n <= 60; ++n) {
      CHECK(table[n] == gamma_p_nat(n, p));
    }
  }
}
