#include "pgam/mahler.hpp"

#include <algorithm>

namespace pgam {

FormalSeries::FormalSeries(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("FormalSeries: negative degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, mpq_class(0));
}

FormalSeries::FormalSeries(int degree, std::vector<mpq_class> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("FormalSeries: negative degree");
  coeffs_.resize(static_cast<std::size_t>(degree) + 1, mpq_class(0));
}

void FormalSeries::set_coeff(int i, const mpq_class& v) {
  coeffs_.at(static_cast<std::size_t>(i)) = v;
}

FormalSeries FormalSeries::add(const FormalSeries& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("FormalSeries: degree mismatch");
  FormalSeries out(degree_);
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return out;
}

FormalSeries FormalSeries::sub(const FormalSeries& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("FormalSeries: degree mismatch");
  FormalSeries out(degree_);
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  return out;
}

FormalSeries FormalSeries::mul(const FormalSeries& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("FormalSeries: degree mismatch");
  FormalSeries out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= degree_; ++j) {
      if (other.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return out;
}

FormalSeries FormalSeries::substitute_sign(int s) const {
  if (s != 1 && s != -1) throw std::invalid_argument("substitute_sign: s must be +/-1");
  FormalSeries out = *this;
  if (s == -1) {
    for (int i = 1; i <= degree_; i += 2) out.coeffs_[i] = -out.coeffs_[i];
  }
  return out;
}

FormalSeries FormalSeries::exp() const {
  if (coeffs_[0] != 0) {
    throw std::domain_error("FormalSeries::exp: nonzero constant term");
  }
  FormalSeries out(degree_);
  out.coeffs_[0] = 1;
  FormalSeries term(degree_);
  term.coeffs_[0] = 1;
  // No constant term, so A^m contributes nothing below degree m.
  for (int m = 1; m <= degree_; ++m) {
    term = term.mul(*this);
    mpq_class inv_m(1, m);
    for (int i = 0; i <= degree_; ++i) term.coeffs_[i] *= inv_m;
    out = out.add(term);
  }
  return out;
}

bool FormalSeries::operator==(const FormalSeries& other) const {
  return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

MahlerCoefficients mahler_coefficients(const PrimeContext& ctx, int K) {
  if (K < 0) throw std::invalid_argument("mahler_coefficients: K must be >= 0");
  MahlerCoefficients mc;
  mc.p = ctx.p;
  mc.t = ctx.t;
  mc.K = K;

  // Table of G_q(k+1), then an in-place forward-difference ladder.
  std::vector<mpz_class> table = gamma_p_table(static_cast<unsigned long>(K) + 1, ctx.p);
  std::vector<mpz_class> values(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    mpz_class acc = 1;
    unsigned long cur = static_cast<unsigned long>(k);
    for (unsigned l = 0; l < ctx.t; ++l) {
      acc *= table[cur + 1];
      cur /= ctx.p;
    }
    values[static_cast<std::size_t>(k)] = acc;
  }

  mc.coeffs.resize(static_cast<std::size_t>(K) + 1);
  mc.valuations.resize(static_cast<std::size_t>(K) + 1);
  for (int eta = 0; eta <= K; ++eta) {
    mc.coeffs[static_cast<std::size_t>(eta)] = values[0];
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      values[i] = values[i + 1] - values[i];
    }
    values.pop_back();
  }
  for (int eta = 0; eta <= K; ++eta) {
    const mpz_class& a = mc.coeffs[static_cast<std::size_t>(eta)];
    if (a == 0) {
      mc.valuations[static_cast<std::size_t>(eta)] = std::nullopt;
    } else {
      mc.valuations[static_cast<std::size_t>(eta)] = valuation_int(a, ctx.p);
    }
  }
  return mc;
}

PadicInt binomial_eval(const PadicInt& x, unsigned k) {
  const std::uint64_t p = x.prime();
  const int N = x.precision();
  if (k == 0) return PadicInt::from_integer(1, p, N);

  mpz_class kfact;
  mpz_fac_ui(kfact.get_mpz_t(), k);
  const long v = valuation_int(kfact, p);
  if (v >= N) throw precision_error("binomial_eval: precision exhausted");

  PadicInt num = PadicInt::from_integer(1, p, N);
  for (unsigned i = 0; i < k; ++i) {
    num = num.mul(x.sub(PadicInt::from_integer(i, p, N)));
  }
  PadicInt shifted = num.div_exact_p_power(static_cast<int>(v));
  mpz_class unit = kfact / pow_p(p, static_cast<unsigned>(v));
  return shifted.mul(PadicInt(p, shifted.precision(), unit).unit_inverse());
}

mpz_class mahler_partial_sum(const PadicInt& x, const MahlerCoefficients& mc, int K) {
  if (x.prime() != mc.p) throw std::invalid_argument("mahler_partial_sum: mismatched primes");
  if (K > mc.K) throw std::invalid_argument("mahler_partial_sum: K exceeds stored coefficients");
  mpz_class sum = 0;
  mpz_class binom;
  for (int eta = 0; eta <= K; ++eta) {
    const mpz_class& a = mc.coeffs[static_cast<std::size_t>(eta)];
    if (a == 0) continue;
    mpz_bin_ui(binom.get_mpz_t(), x.residue().get_mpz_t(), static_cast<unsigned long>(eta));
    sum += a * binom;
  }
  return sum;
}

PadicInt mahler_evaluate(const PadicInt& x, const MahlerCoefficients& mc, int K) {
  mpz_class sum = mahler_partial_sum(x, mc, K);
  const int N = x.precision();
  // Perturbing x by O(p^N) moves binom(x, eta) by O(p^{N - floor(log_p eta)}):
  // binom(x+h, eta) - binom(x, eta) = sum_{j>=1} binom(x, eta-j) binom(h, j)
  // and v(binom(h, j)) >= N - v_p(j).  Each term's error is then scaled by
  // the exact coefficient a_eta.
  long flog = 0;
  mpz_class next_power(mc.p);
  long worst = N;
  for (int eta = 1; eta <= K; ++eta) {
    if (next_power <= eta) {
      ++flog;
      next_power *= mc.p;
    }
    const auto& v = mc.valuations[static_cast<std::size_t>(eta)];
    if (!v) continue;
    worst = std::min(worst, N - flog + *v);
  }
  if (worst < 1) throw precision_error("mahler_evaluate: precision exhausted");
  return PadicInt(mc.p, static_cast<int>(worst), sum);
}

namespace {

// Coefficient ladder shared by the printed delta and its scan variants:
// lambda-th coefficient sigma^lambda * ((-1)^t if kept) * (-p)^{v_p(lambda!)}.
FormalSeries delta_variant(const PrimeContext& ctx, int D, bool negated_x, bool keep_t_sign) {
  FormalSeries out(D);
  long v = 0;  // v_p(lambda!)
  for (int lambda = 0; lambda <= D; ++lambda) {
    if (mpz_class(lambda) >= ctx.q) break;
    if (lambda > 1) v += valuation_int(mpz_class(lambda), ctx.p);
    mpz_class mp_pow;
    mpz_class minus_p = -mpz_class(ctx.p);
    mpz_pow_ui(mp_pow.get_mpz_t(), minus_p.get_mpz_t(), static_cast<unsigned long>(v));
    mpq_class c(mp_pow);
    if (negated_x && lambda % 2 != 0) c = -c;
    if (keep_t_sign && ctx.t % 2 != 0) c = -c;
    out.set_coeff(lambda, c);
  }
  return out;
}

}  // namespace

FormalSeries delta_series(const PrimeContext& ctx, int D) {
  return delta_variant(ctx, D, /*negated_x=*/true, /*keep_t_sign=*/true);
}

FormalSeries lhs_series(const PrimeContext& ctx, int D, const SignConvention& conv) {
  const int s = conv.exp_negated_x ? -1 : 1;

  // exp((sx)^q/q + sx)
  FormalSeries arg(D);
  if (D >= 1) arg.set_coeff(1, mpq_class(s));
  if (ctx.q <= D) {
    mpq_class cq(1);
    cq /= mpq_class(ctx.q);
    if (s == -1 && mpz_odd_p(ctx.q.get_mpz_t())) cq = -cq;
    arg.set_coeff(static_cast<int>(ctx.q.get_ui()), cq);
  }
  FormalSeries expo = arg.exp();

  FormalSeries delta = delta_variant(ctx, D, conv.delta_negated_x, conv.t_sign_in_delta);
  return expo.mul(delta);
}

FormalSeries rhs_series(const MahlerCoefficients& mc, int D) {
  if (mc.K < D) throw std::invalid_argument("rhs_series: too few coefficients");
  FormalSeries out(D);
  mpz_class fact = 1;
  for (int eta = 0; eta <= D; ++eta) {
    if (eta > 0) fact *= eta;
    mpq_class c(mc.coeffs[static_cast<std::size_t>(eta)]);
    c /= mpq_class(fact);
    if ((eta + static_cast<int>(mc.t)) % 2 != 0) c = -c;
    c.canonicalize();
    out.set_coeff(eta, c);
  }
  return out;
}

GfReport gf_compare(const PrimeContext& ctx, int D) {
  if (D < 0) throw std::invalid_argument("gf_compare: D must be >= 0");
  GfReport rep;
  rep.p = ctx.p;
  rep.t = ctx.t;
  rep.degree = D;

  MahlerCoefficients mc = mahler_coefficients(ctx, D);
  FormalSeries rhs = rhs_series(mc, D);

  int best_prefix = -1;
  for (int mask = 0; mask < 8; ++mask) {
    SignConvention conv;
    conv.delta_negated_x = (mask & 1) != 0;
    conv.exp_negated_x = (mask & 2) != 0;
    conv.t_sign_in_delta = (mask & 4) != 0;

    ConventionReport cr;
    cr.conv = conv;
    cr.is_classical = !conv.delta_negated_x && !conv.exp_negated_x && !conv.t_sign_in_delta;
    cr.is_paper_verbatim = conv.delta_negated_x && !conv.exp_negated_x && conv.t_sign_in_delta;

    FormalSeries lhs = lhs_series(ctx, D, conv);
    FormalSeries diff = lhs.sub(rhs);
    cr.diff_valuations.resize(static_cast<std::size_t>(D) + 1);
    cr.exact = true;
    cr.first_mismatch = -1;
    for (int d = 0; d <= D; ++d) {
      const mpq_class& c = diff.coeff(d);
      if (c == 0) {
        cr.diff_valuations[static_cast<std::size_t>(d)] = std::nullopt;
      } else {
        cr.diff_valuations[static_cast<std::size_t>(d)] = valuation_rat(c, ctx.p);
        if (cr.exact) {
          cr.exact = false;
          cr.first_mismatch = d;
        }
      }
    }

    const int idx = static_cast<int>(rep.conventions.size());
    const int prefix = cr.exact ? D + 1 : cr.first_mismatch;
    if (prefix > best_prefix) {
      best_prefix = prefix;
      rep.best_index = idx;
    }
    if (cr.is_classical) {
      rep.classical_index = idx;
      rep.classical_exact = cr.exact;
    }
    rep.conventions.push_back(std::move(cr));
  }
  return rep;
}

}  // namespace pgam
