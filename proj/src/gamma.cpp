#include "pgam/gamma.hpp"

#include <algorithm>

namespace pgam {

namespace {

int sign_of(const mpz_class& exponent) {
  return mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

mpz_class factorial_z(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("factorial_z: negative argument");
  if (!n.fits_ulong_p()) throw std::invalid_argument("factorial_z: argument too large");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n.get_ui());
  return out;
}

// v_p(n!) by Legendre's formula.
mpz_class legendre_valuation(const mpz_class& n, std::uint64_t p) {
  mpz_class acc = 0;
  mpz_class cur = n;
  while (cur > 0) {
    cur = floor_div(cur, mpz_class(p));
    acc += cur;
  }
  return acc;
}

}  // namespace

mpz_class gamma_p_nat(unsigned long n, std::uint64_t p) {
  if (n == 0) return 1;
  mpz_class acc = 1;
  for (unsigned long j = 1; j + 1 <= n; ++j) {
    if (j % p != 0) acc *= j;
  }
  if (n % 2 != 0) acc = -acc;
  return acc;
}

mpz_class gamma_p_mod(const mpz_class& m, std::uint64_t p, int N) {
  if (m < 0) throw std::invalid_argument("gamma_p_mod: representative must be >= 0");
  mpz_class modulus = pow_p(p, static_cast<unsigned>(N));
  if (m == 0) return 1;

  mpz_class acc;
  if (modulus.fits_ulong_p() && mpz_sizeinbase(modulus.get_mpz_t(), 2) <= 63 &&
      m.fits_ulong_p()) {
    const std::uint64_t mod = modulus.get_ui();
    const std::uint64_t top = m.get_ui();
    std::uint64_t a = 1 % mod;
    for (std::uint64_t j = 1; j < top; ++j) {
      if (j % p != 0) {
        a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * (j % mod)) % mod);
      }
    }
    acc = mpz_class(static_cast<unsigned long>(a));
  } else {
    acc = 1;
    mpz_class j;
    for (j = 1; j < m; ++j) {
      if (!mpz_divisible_ui_p(j.get_mpz_t(), static_cast<unsigned long>(p))) {
        acc *= j;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
      }
    }
  }
  if (mpz_odd_p(m.get_mpz_t())) acc = modulus - acc;
  mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  return acc;
}

GammaValue gamma_p(const PadicInt& x) {
  const std::uint64_t p = x.prime();
  const int N = x.precision();
  if (p == 2 && N < 3) {
    throw precision_error("gamma_p: p = 2 needs precision >= 3");
  }
  mpz_class value = gamma_p_mod(x.residue(), p, N);
  return GammaValue{PadicInt(p, N, value), std::nullopt};
}

GammaPClosedReport gamma_p_closed(unsigned long n, std::uint64_t p) {
  GammaPClosedReport rep;
  const mpz_class nz(n);
  const mpz_class np = floor_div(nz, mpz_class(p));
  mpq_class quotient(factorial_z(nz));
  quotient /= mpq_class(factorial_z(np) * pow_p(p, static_cast<unsigned>(np.get_ui())));
  if (n % 2 == 0) quotient = -quotient;  // (-1)^{n+1}
  quotient.canonicalize();
  rep.quotient_form = quotient;

  // n = n'p + k with 0 <= k < p.
  const unsigned long k = n % p;
  const unsigned long nprime = n / p;
  mpq_class decomposed(factorial_z(mpz_class(n)));
  decomposed /= mpq_class(factorial_z(mpz_class(nprime)) * pow_p(p, static_cast<unsigned>(nprime)));
  if ((nprime * p + k) % 2 == 0) decomposed = -decomposed;  // (-1)^{n'p+k+1}
  decomposed.canonicalize();
  rep.decomposed_form = decomposed;

  rep.reference = gamma_p_nat(n + 1, p);
  rep.all_equal = (rep.quotient_form == mpq_class(rep.reference)) &&
                  (rep.decomposed_form == mpq_class(rep.reference));
  return rep;
}

mpz_class factorial_via_gamma(unsigned long n, std::uint64_t p) {
  if (n < 1) throw std::invalid_argument("factorial_via_gamma: n must be >= 1");
  // Digit data of n.
  unsigned long s = 0;
  int ell = -1;
  {
    unsigned long cur = n;
    int idx = 0;
    while (cur > 0) {
      s += cur % p;
      ell = idx;
      cur /= p;
      ++idx;
    }
  }
  mpz_class acc = 1;
  unsigned long cur = n;
  for (int i = 0; i <= ell; ++i) {
    acc *= gamma_p_nat(cur + 1, p);
    cur /= p;
  }
  mpz_class shift;
  mpz_class e = mpz_class(n - s) / mpz_class(p - 1);  // v_p(n!), exact
  mpz_class minus_p = -mpz_class(p);
  mpz_pow_ui(shift.get_mpz_t(), minus_p.get_mpz_t(), e.get_ui());
  acc *= shift;
  if ((n + 1 - static_cast<unsigned long>(ell)) % 2 != 0) acc = -acc;
  return acc;
}

mpz_class gamma_q_nat(unsigned long n, const PrimeContext& ctx) {
  mpz_class acc = 1;
  unsigned long cur = n;
  for (unsigned l = 0; l < ctx.t; ++l) {
    acc *= gamma_p_nat(cur + 1, ctx.p);
    cur /= ctx.p;
  }
  return acc;
}

GammaValue gamma_q(const PadicInt& x, const PrimeContext& ctx) {
  if (x.prime() != ctx.p) throw std::invalid_argument("gamma_q: mismatched primes");
  const int N = x.precision();
  if (ctx.p == 2) {
    if (N < static_cast<int>(ctx.t) + 2) {
      throw precision_error("gamma_q: p = 2 needs precision >= t + 2");
    }
  } else if (N < static_cast<int>(ctx.t)) {
    throw precision_error("gamma_q: precision below t");
  }
  // The product only carries N - t + 1 digits, and G_p(m) mod p^s depends
  // only on m mod p^s, so every factor can be evaluated at the output
  // precision directly (that keeps the representatives small).
  const int target = N - static_cast<int>(ctx.t) + 1;
  PadicInt one = PadicInt::from_integer(1, ctx.p, target);
  PadicInt acc = PadicInt::from_integer(1, ctx.p, target);
  for (unsigned l = 0; l < ctx.t; ++l) {
    PadicInt hl = x.h_ell(static_cast<int>(l)).with_precision(target);
    acc = acc.mul(gamma_p(hl.add(one)).value);
  }
  return GammaValue{acc, std::nullopt};
}

GammaValue gamma_q_at(const PadicInt& y, const PrimeContext& ctx) {
  PadicInt one = PadicInt::from_integer(1, ctx.p, y.precision());
  return gamma_q(y.sub(one), ctx);
}

GammaValue gamma_q_of_integer(const mpz_class& n, const PrimeContext& ctx, int precision) {
  PadicInt x = PadicInt::from_integer(n, ctx.p, precision);
  GammaValue gv = gamma_q(x, ctx);
  if (n >= 0 && n.fits_ulong_p()) {
    gv.exact = gamma_q_nat(n.get_ui(), ctx);
  } else if (n == -1) {
    gv.exact = 1;
  }
  return gv;
}

ExponentPair exponents(unsigned long n, const PrimeContext& ctx) {
  ExponentPair e;
  e.A = ctx.t;
  mpz_class nz(n);
  mpz_class pi = 1;
  for (unsigned i = 0; i < ctx.t; ++i) {
    e.A += floor_div(nz, pi);
    pi *= ctx.p;
  }
  e.B = 0;
  pi = ctx.p;
  for (unsigned i = 1; i <= ctx.t; ++i) {
    e.B += floor_div(nz, pi);
    pi *= ctx.p;
  }
  e.B -= mpz_class(ctx.t) * floor_div(nz, ctx.q);
  return e;
}

mpq_class ota_gamma(unsigned long n, const PrimeContext& ctx) {
  ExponentPair e = exponents(n, ctx);
  mpq_class out(factorial_q(n, ctx, FactorialVariant::QSkip));
  out /= mpq_class(pow_p(ctx.p, static_cast<unsigned>(e.B.get_ui())));
  if (sign_of(e.A) < 0) out = -out;
  out.canonicalize();
  return out;
}

ExponentPair exponents_q_pow_s_minus_1(unsigned s, const PrimeContext& ctx) {
  if (s < 1) throw std::invalid_argument("exponents_q_pow_s_minus_1: s must be >= 1");
  ExponentPair e;
  e.A = 0;
  e.B = 0;
  for (unsigned i = 0; i < ctx.t; ++i) e.A += pow_p(ctx.p, ctx.t * s - i);
  for (unsigned i = 1; i <= ctx.t; ++i) e.B += pow_p(ctx.p, ctx.t * s - i);
  e.B -= mpz_class(ctx.t) * pow_p(ctx.p, ctx.t * (s - 1));
  return e;
}

ExponentPair exponents_q_pow_s(unsigned s, const PrimeContext& ctx) {
  ExponentPair e = exponents_q_pow_s_minus_1(s, ctx);
  e.A += ctx.t;
  return e;
}

mpq_class gamma_q_closed(unsigned long n, const PrimeContext& ctx, ClosedCase c) {
  const mpz_class nz(n);
  switch (c) {
    case ClosedCase::General: {
      ExponentPair e = exponents(n, ctx);
      mpz_class m = floor_div(nz, ctx.q);
      mpq_class out(factorial_z(nz));
      out /= mpq_class(factorial_z(m) *
                       pow_p(ctx.p, ctx.t * static_cast<unsigned>(m.get_ui())) *
                       pow_p(ctx.p, static_cast<unsigned>(e.B.get_ui())));
      if (sign_of(e.A) < 0) out = -out;
      out.canonicalize();
      return out;
    }
    case ClosedCase::MqLambda: {
      mpz_class m = floor_div(nz, ctx.q);
      mpz_class lambda = nz - m * ctx.q;
      mpz_class vlam = legendre_valuation(lambda, ctx.p);
      // A = t + lambda + v_p(lambda!) + m * (p + p^2 + ... + p^t); the last
      // sum is what the digit expansion of n = mq + lambda contributes.
      mpz_class geom = 0;
      for (unsigned i = 1; i <= ctx.t; ++i) geom += pow_p(ctx.p, i);
      mpz_class A = ctx.t + lambda + vlam + m * geom;
      mpz_class B = m * ((ctx.q - 1) / mpz_class(ctx.p - 1) - ctx.t) + vlam;
      mpq_class out(factorial_z(nz));
      out /= mpq_class(factorial_z(m) *
                       pow_p(ctx.p, ctx.t * static_cast<unsigned>(m.get_ui())) *
                       pow_p(ctx.p, static_cast<unsigned>(B.get_ui())));
      if (sign_of(A) < 0) out = -out;
      out.canonicalize();
      return out;
    }
    case ClosedCase::QPowSMinus1: {
      // n must be q^s - 1 for some s >= 1.
      mpz_class target = nz + 1;
      unsigned s = 0;
      mpz_class qs = 1;
      while (qs < target) {
        qs *= ctx.q;
        ++s;
      }
      if (qs != target || s < 1) {
        throw std::invalid_argument("gamma_q_closed: n is not q^s - 1");
      }
      ExponentPair e = exponents_q_pow_s_minus_1(s, ctx);
      mpz_class qs1 = pow_p(ctx.p, ctx.t * (s - 1));  // q^{s-1}
      mpq_class out(factorial_z(nz));
      out /= mpq_class(factorial_z(qs1 - 1) *
                       pow_p(ctx.p, ctx.t * static_cast<unsigned>(mpz_class(qs1 - 1).get_ui())) *
                       pow_p(ctx.p, static_cast<unsigned>(e.B.get_ui())));
      if (sign_of(e.A) < 0) out = -out;
      out.canonicalize();
      return out;
    }
    case ClosedCase::QPowS: {
      mpz_class target = nz;
      unsigned s = 0;
      mpz_class qs = 1;
      while (qs < target) {
        qs *= ctx.q;
        ++s;
      }
      if (qs != target || s < 1) {
        throw std::invalid_argument("gamma_q_closed: n is not q^s");
      }
      ExponentPair e = exponents_q_pow_s(s, ctx);
      mpz_class qs1 = pow_p(ctx.p, ctx.t * (s - 1));
      mpq_class out(factorial_z(nz));
      out /= mpq_class(factorial_z(qs1) *
                       pow_p(ctx.p, ctx.t * static_cast<unsigned>(qs1.get_ui())) *
                       pow_p(ctx.p, static_cast<unsigned>(e.B.get_ui())));
      if (sign_of(e.A) < 0) out = -out;
      out.canonicalize();
      return out;
    }
  }
  throw std::invalid_argument("gamma_q_closed: unknown case");
}

FunctionalStepResult functional_step(const PadicInt& x, const PrimeContext& ctx) {
  if (x.precision() < static_cast<int>(ctx.t)) {
    throw precision_error("functional_step: cannot decide the branch below t digits");
  }
  PadicInt gx = gamma_q_at(x, ctx).value;
  mpz_class rq;
  mpz_mod(rq.get_mpz_t(), x.residue().get_mpz_t(), ctx.q.get_mpz_t());
  FunctionalStepResult out{gx, FunctionalBranch::QMultiple, 0};
  if (rq == 0) {
    out.predicted = (ctx.t % 2 == 0) ? gx : gx.negate();
    return out;
  }
  Valuation v = x.valuation();  // exact: rq != 0 forces v < t <= N
  out.branch = FunctionalBranch::UnitDigitShift;
  out.k = v.v;
  PadicInt hk = x.h_ell(v.v);
  PadicInt prod = hk.mul(gx);
  out.predicted = (v.v % 2 == 0) ? prod.negate() : prod;  // (-1)^{k+1}
  return out;
}

ComplementResult complement(const PadicInt& x, const PrimeContext& ctx) {
  if (x.precision() < static_cast<int>(ctx.t) + 1) {
    throw precision_error("complement: precision below t + 1");
  }
  PadicInt one = PadicInt::from_integer(1, ctx.p, x.precision());
  PadicInt lhs = gamma_q_at(x, ctx).value.mul(gamma_q_at(one.sub(x), ctx).value);

  ComplementResult out{lhs, 1, 0, false};
  if (ctx.p != 2) {
    mpz_class r = residue_rep(x, ctx);
    out.rhs_sign = sign_of(mpz_class(ctx.t - 1 + r));
    out.branch = 0;
  } else {
    const std::uint32_t xt = x.digits().digits[ctx.t];
    Valuation v = x.valuation();
    const bool unit = v.exact && v.v == 0;
    const bool in_q_z2 = !v.exact || v.v >= static_cast<int>(ctx.t);
    if (!in_q_z2 && !unit) {
      out.branch = 1;
      out.rhs_sign = sign_of(mpz_class(ctx.t + 1 + xt));
    } else {
      out.branch = 2;
      out.rhs_sign = sign_of(mpz_class(ctx.t + xt));
    }
  }
  PadicInt rhs = PadicInt::from_integer(out.rhs_sign, ctx.p, lhs.precision());
  out.equal = lhs.congruent(rhs, lhs.precision());
  return out;
}

namespace {

// Shared lhs of the multiplication identity:
//   G_q(x) * prod_{i<N} G_q(i/N) * (prod_{i<N} G_q((x+i)/N))^{-1}
PadicInt gauss_legendre_lhs(const PadicInt& x, unsigned ncoef, const PrimeContext& ctx) {
  const int N = x.precision();
  PadicInt inv_n = PadicInt::from_rational(1, mpz_class(ncoef), ctx.p, N);
  PadicInt acc = gamma_q_at(x, ctx).value;
  PadicInt denom = PadicInt::from_integer(1, ctx.p, N);
  for (unsigned i = 0; i < ncoef; ++i) {
    PadicInt over_n = PadicInt::from_integer(i, ctx.p, N).mul(inv_n);
    acc = acc.mul(gamma_q_at(over_n, ctx).value);
    PadicInt shifted = x.add(PadicInt::from_integer(i, ctx.p, N)).mul(inv_n);
    denom = denom.mul(gamma_q_at(shifted, ctx).value);
  }
  return acc.mul(denom.unit_inverse());
}

void check_gauss_args(unsigned ncoef, const PrimeContext& ctx) {
  if (ncoef < 2) throw std::invalid_argument("gauss_legendre: N must be >= 2");
  if (ncoef % ctx.p == 0) throw std::invalid_argument("gauss_legendre: p divides N");
}

}  // namespace

GaussLegendreResult gauss_legendre(const PadicInt& x, unsigned ncoef,
                                   const PrimeContext& ctx) {
  check_gauss_args(ncoef, ctx);
  if (ctx.p == 2) {
    throw std::invalid_argument(
        "gauss_legendre: p = 2 needs an integer argument (base not a 1-unit mod 4)");
  }
  const int N = x.precision();
  if (N < static_cast<int>(ctx.t) + 2) {
    throw precision_error("gauss_legendre: precision below t + 2");
  }

  PadicInt lhs = gauss_legendre_lhs(x, ncoef, ctx);

  mpz_class r = residue_rep(x, ctx);
  PadicInt rp = residue_rep_prime(x, ctx);
  mpz_class modulus = pow_p(ctx.p, static_cast<unsigned>(N));
  mpz_class base_pow;
  mpz_class qm1 = ctx.q - 1;
  mpz_powm(base_pow.get_mpz_t(), mpz_class(ncoef).get_mpz_t(), qm1.get_mpz_t(),
           modulus.get_mpz_t());
  PadicInt unit_base(ctx.p, N, base_pow);
  PadicInt factor2 = unit_base.unit_pow(rp);
  mpz_class f1;
  mpz_class rm1 = r - 1;
  mpz_powm(f1.get_mpz_t(), mpz_class(ncoef).get_mpz_t(), rm1.get_mpz_t(), modulus.get_mpz_t());
  PadicInt rhs = PadicInt(ctx.p, N, f1).mul(factor2);

  const int shared = std::min(lhs.precision(), rhs.precision());
  return GaussLegendreResult{lhs, rhs, lhs.congruent(rhs, shared)};
}

GaussLegendreResult gauss_legendre(const mpz_class& n, unsigned ncoef,
                                   const PrimeContext& ctx, int precision) {
  check_gauss_args(ncoef, ctx);
  if (precision < static_cast<int>(ctx.t) + 2) {
    throw precision_error("gauss_legendre: precision below t + 2");
  }
  PadicInt x = PadicInt::from_integer(n, ctx.p, precision);
  PadicInt lhs = gauss_legendre_lhs(x, ncoef, ctx);

  // Integer argument: the whole exponent is an exact integer, so no p-adic
  // exponentiation is needed (this is the p = 2 safe path as well).
  mpz_class rm;
  mpz_mod(rm.get_mpz_t(), n.get_mpz_t(), ctx.q.get_mpz_t());
  mpz_class r = (rm == 0) ? ctx.q : rm;
  mpz_class rprime = (n - r) / ctx.q;
  mpz_class expo = (r - 1) + (ctx.q - 1) * rprime;
  mpz_class modulus = pow_p(ctx.p, static_cast<unsigned>(precision));
  mpz_class val;
  mpz_powm(val.get_mpz_t(), mpz_class(ncoef).get_mpz_t(), expo.get_mpz_t(),
           modulus.get_mpz_t());
  PadicInt rhs(ctx.p, precision, val);

  const int shared = std::min(lhs.precision(), rhs.precision());
  return GaussLegendreResult{lhs, rhs, lhs.congruent(rhs, shared)};
}

RootsProductResult roots_product(unsigned ncoef, const PrimeContext& ctx, int precision) {
  check_gauss_args(ncoef, ctx);
  PadicInt inv_n = PadicInt::from_rational(1, mpz_class(ncoef), ctx.p, precision);
  PadicInt z = PadicInt::from_integer(1, ctx.p, precision);
  for (unsigned j = 1; j < ncoef; ++j) {
    PadicInt arg = PadicInt::from_integer(j, ctx.p, precision).mul(inv_n);
    z = z.mul(gamma_q_at(arg, ctx).value);
  }
  PadicInt z4 = z.mul(z).mul(z).mul(z);
  PadicInt one = PadicInt::from_integer(1, ctx.p, z4.precision());
  return RootsProductResult{z, z4.congruent(one, z4.precision())};
}

BinomialRatioResult binomial_ratio(unsigned a, unsigned b, unsigned r,
                                   const PrimeContext& ctx, int precision) {
  if (!(0 < a && a < b && mpz_class(b) < ctx.q - 1)) {
    throw std::invalid_argument("binomial_ratio: need 0 < a < b < q - 1");
  }
  if (r < 1) throw std::invalid_argument("binomial_ratio: r must be >= 1");

  auto level = [&](unsigned rr, unsigned c) {
    mpz_class geom = (pow_p(ctx.p, ctx.t * rr) - 1) / (ctx.q - 1);
    return mpz_class(c * geom);
  };
  const mpz_class n_r = level(r, b), m_r = level(r, a);
  const mpz_class n_r1 = level(r - 1, b), m_r1 = level(r - 1, a);

  auto binom = [](const mpz_class& n, const mpz_class& k) {
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return out;
  };

  BinomialRatioResult out{mpq_class(0), mpq_class(0), false,
                          PadicInt(ctx.p, 1, 0), PadicInt(ctx.p, 1, 0), false,
                          n_r, m_r};
  out.lhs = mpq_class(binom(n_r, m_r)) / mpq_class(binom(n_r1, m_r1));
  out.lhs.canonicalize();

  const long v = valuation_int(binom(mpz_class(b), mpz_class(a)), ctx.p);
  mpz_class minus_p_pow;
  mpz_class minus_p = -mpz_class(ctx.p);
  mpz_pow_ui(minus_p_pow.get_mpz_t(), minus_p.get_mpz_t(), static_cast<unsigned long>(v));

  mpq_class first(gamma_q_nat(n_r.get_ui(), ctx));
  first /= mpq_class(gamma_q_nat(m_r.get_ui(), ctx) *
                     gamma_q_nat(mpz_class(n_r - m_r).get_ui(), ctx));
  first *= mpq_class(minus_p_pow);
  if (ctx.t % 2 != 0) first = -first;
  first.canonicalize();
  out.rhs_first = first;
  out.first_equal = (out.lhs == out.rhs_first);

  // Second form: gamma values at the negative points themselves.
  GammaValue g_neg_m = gamma_q_at(PadicInt::from_integer(-m_r, ctx.p, precision), ctx);
  GammaValue g_m_minus_n =
      gamma_q_at(PadicInt::from_integer(m_r - n_r, ctx.p, precision), ctx);
  GammaValue g_neg_n = gamma_q_at(PadicInt::from_integer(-n_r, ctx.p, precision), ctx);
  PadicInt second =
      g_neg_m.value.mul(g_m_minus_n.value).mul(g_neg_n.value.unit_inverse());
  second = second.mul_integer(minus_p_pow);
  out.second_rhs = second;
  out.second_lhs = PadicInt::from_rational(out.lhs.get_num(), out.lhs.get_den(),
                                           ctx.p, second.precision());
  out.second_equal = out.second_rhs.congruent(out.second_lhs, second.precision());
  return out;
}

LipschitzReport lipschitz_probe(const PadicInt& x, const PadicInt& y,
                                const PrimeContext& ctx) {
  LipschitzReport rep;
  PadicInt diff = x.sub(y);
  if (diff.is_zero_residue()) {
    rep.input_distance = 0;
    rep.input_distance_exact = false;
  } else {
    AbsValue av = diff.abs_p();
    rep.input_distance = av.value;
    rep.input_distance_exact = av.exact;
  }
  PadicInt gd = gamma_q_at(x, ctx).value.sub(gamma_q_at(y, ctx).value);
  if (gd.is_zero_residue()) {
    rep.gamma_distance = 0;
    rep.gamma_distance_exact = false;
  } else {
    AbsValue av = gd.abs_p();
    rep.gamma_distance = av.value;
    rep.gamma_distance_exact = av.exact;
  }
  rep.upper_clause_applies = rep.input_distance_exact && rep.input_distance == 1;
  if (rep.upper_clause_applies) {
    rep.upper_clause_holds = rep.gamma_distance <= rep.input_distance;
  }
  rep.lower_observed = rep.gamma_distance >= rep.input_distance;
  return rep;
}

std::vector<mpz_class> gamma_p_table(unsigned long max_n, std::uint64_t p) {
  std::vector<mpz_class> table(max_n + 1);
  table[0] = 1;
  if (max_n >= 1) table[1] = -1;
  for (unsigned long n = 1; n < max_n; ++n) {
    mpz_class step = (n % p != 0) ? mpz_class(n) : mpz_class(1);
    table[n + 1] = -table[n] * step;
  }
  return table;
}

}  // namespace pgam
