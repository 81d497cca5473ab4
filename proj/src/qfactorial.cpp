#include "pgam/qfactorial.hpp"

namespace pgam {

namespace {

bool keeps(const mpz_class& j, const PrimeContext& ctx, FactorialVariant variant) {
  if (variant == FactorialVariant::QSkip) {
    return !mpz_divisible_p(j.get_mpz_t(), ctx.q.get_mpz_t());
  }
  return mpz_divisible_ui_p(j.get_mpz_t(), static_cast<unsigned long>(ctx.p)) == 0;
}

}  // namespace

mpz_class factorial_p(unsigned long n, std::uint64_t p) {
  mpz_class acc = 1;
  for (unsigned long j = 1; j <= n; ++j) {
    if (j % p != 0) acc *= j;
  }
  return acc;
}

mpz_class factorial_q(unsigned long n, const PrimeContext& ctx, FactorialVariant variant) {
  if (variant == FactorialVariant::Coprime) return factorial_p(n, ctx.p);
  mpz_class acc = 1;
  mpz_class j;
  for (unsigned long i = 1; i <= n; ++i) {
    j = i;
    if (keeps(j, ctx, variant)) acc *= j;
  }
  return acc;
}

mpz_class range_product(const mpz_class& a, unsigned long length,
                        const PrimeContext& ctx, FactorialVariant variant) {
  if (a < 1) throw std::invalid_argument("range_product: a must be >= 1");
  mpz_class acc = 1;
  mpz_class j = a;
  for (unsigned long i = 0; i < length; ++i, ++j) {
    if (keeps(j, ctx, variant)) acc *= j;
  }
  return acc;
}

WilsonResult wilson_check(const mpz_class& a, unsigned s, const PrimeContext& ctx) {
  if (a < 1) throw std::invalid_argument("wilson_check: a must be >= 1");
  if (ctx.p == 2) {
    if (s < 3) throw std::invalid_argument("wilson_check: p = 2 requires s >= 3");
  } else if (s < 1) {
    throw std::invalid_argument("wilson_check: s must be >= 1");
  }
  mpz_class ps = pow_p(ctx.p, s);
  mpz_class prod = range_product(a, ps.get_ui(), ctx, FactorialVariant::Coprime);
  mpz_class r;
  mpz_mod(r.get_mpz_t(), prod.get_mpz_t(), ps.get_mpz_t());
  WilsonResult out;
  out.residue = r;
  if (ctx.p == 2) {
    out.verdict = (r == 1) ? WilsonVerdict::HoldsPlusOne : WilsonVerdict::Fails;
  } else {
    out.verdict = (r == ps - 1) ? WilsonVerdict::HoldsMinusOne : WilsonVerdict::Fails;
  }
  return out;
}

RatioResult ratio_congruence(unsigned long n, unsigned m, unsigned s,
                             const PrimeContext& ctx) {
  if (m < 1) throw std::invalid_argument("ratio_congruence: m must be >= 1");
  if (ctx.p == 2) {
    if (s < 3) throw std::invalid_argument("ratio_congruence: p = 2 requires s >= 3");
  } else if (s < 1) {
    throw std::invalid_argument("ratio_congruence: s must be >= 1");
  }
  mpz_class ps = pow_p(ctx.p, s);
  // The ratio is the product over (n, n + m p^s]; no division needed.
  mpz_class length = ps * m;
  mpz_class ratio = range_product(mpz_class(n + 1), length.get_ui(), ctx,
                                  FactorialVariant::Coprime);
  RatioResult out;
  mpz_mod(out.observed.get_mpz_t(), ratio.get_mpz_t(), ps.get_mpz_t());
  if (ctx.p == 2) {
    out.expected = 1;
  } else {
    out.expected = (m % 2 == 0) ? mpz_class(1) : mpz_class(ps - 1);
  }
  out.holds = (out.observed == out.expected);
  return out;
}

NormReport corollary_norms(unsigned long n, unsigned s, const PrimeContext& ctx) {
  mpz_class ps = pow_p(ctx.p, s);
  mpz_class fn = factorial_q(n, ctx, FactorialVariant::Coprime);
  mpz_class fns = factorial_q(n + ps.get_ui(), ctx, FactorialVariant::Coprime);
  mpz_class combined = (ctx.p == 2) ? mpz_class(fns - fn) : mpz_class(fns + fn);

  NormReport rep;
  long vf = valuation_int(fn, ctx.p);
  rep.factorial_norm = mpq_class(1) / mpq_class(pow_p(ctx.p, static_cast<unsigned>(vf)));
  rep.unit_norm_holds = (vf == 0);
  if (combined == 0) {
    rep.combined_norm = 0;
  } else {
    long vc = valuation_int(combined, ctx.p);
    rep.combined_norm = mpq_class(1) / mpq_class(pow_p(ctx.p, static_cast<unsigned>(vc)));
  }
  rep.bound = mpq_class(1) / mpq_class(ps);
  rep.bound_holds = (rep.combined_norm <= rep.bound);
  return rep;
}

}  // namespace pgam
