#include "pgam/padic.hpp"

#include <algorithm>
#include <sstream>

namespace pgam {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == sp) return true;
    if (n % sp == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is a proven deterministic witness set for all n < 3.3e24,
  // which covers the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

mpz_class pow_p(std::uint64_t p, unsigned n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), n);
  return out;
}

PrimeContext::PrimeContext(std::uint64_t p_, unsigned t_, int default_precision_)
    : p(p_), t(t_), default_precision(default_precision_) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("PrimeContext: p = " + std::to_string(p) + " is not prime");
  }
  if (t < 1) throw std::invalid_argument("PrimeContext: t must be >= 1");
  if (default_precision < 1) throw std::invalid_argument("PrimeContext: precision must be >= 1");
  q = pow_p(p, t);
}

PrimeContext make_context(std::uint64_t p, unsigned t, int default_precision) {
  return PrimeContext(p, t, default_precision);
}

PadicInt::PadicInt(std::uint64_t p, int precision, mpz_class residue)
    : p_(p), precision_(precision), residue_(std::move(residue)) {
  if (p_ < 2) throw std::invalid_argument("PadicInt: p must be >= 2");
  if (precision_ < 1) throw precision_error("PadicInt: precision must be >= 1");
  mpz_class m = modulus();
  mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t());
}

PadicInt PadicInt::from_integer(const mpz_class& z, std::uint64_t p, int precision) {
  return PadicInt(p, precision, z);
}

PadicInt PadicInt::from_rational(const mpz_class& a, const mpz_class& b,
                                 std::uint64_t p, int precision) {
  if (b == 0) throw std::invalid_argument("from_rational: zero denominator");
  if (mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::domain_error("from_rational: not a p-adic integer at this prime");
  }
  mpz_class m = pow_p(p, static_cast<unsigned>(precision));
  mpz_class binv;
  if (!mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t())) {
    throw std::domain_error("from_rational: denominator not invertible");
  }
  return PadicInt(p, precision, a * binv);
}

Valuation PadicInt::valuation() const {
  if (residue_ == 0) return Valuation{precision_, false};
  mpz_class tmp;
  mp_bitcnt_t v = mpz_remove(tmp.get_mpz_t(), residue_.get_mpz_t(), mpz_class(p_).get_mpz_t());
  return Valuation{static_cast<int>(v), true};
}

AbsValue PadicInt::abs_p() const {
  Valuation val = valuation();
  mpq_class a(1, 1);
  a /= mpq_class(pow_p(p_, static_cast<unsigned>(val.v)));
  a.canonicalize();
  return AbsValue{a, val.exact};
}

DigitExpansion PadicInt::digits() const {
  DigitExpansion d;
  d.p = p_;
  d.digits.reserve(static_cast<std::size_t>(precision_));
  mpz_class cur = residue_;
  mpz_class sum = 0;
  for (int i = 0; i < precision_; ++i) {
    unsigned long dig = mpz_fdiv_ui(cur.get_mpz_t(), static_cast<unsigned long>(p_));
    d.digits.push_back(static_cast<std::uint32_t>(dig));
    sum += dig;
    mpz_fdiv_q_ui(cur.get_mpz_t(), cur.get_mpz_t(), static_cast<unsigned long>(p_));
  }
  d.digit_sum = sum;
  return d;
}

PadicInt PadicInt::h_ell(int ell) const {
  if (ell < 0) throw std::invalid_argument("h_ell: negative shift");
  if (ell >= precision_) throw precision_error("h_ell: shift >= precision");
  if (ell == 0) return *this;
  mpz_class pe = pow_p(p_, static_cast<unsigned>(ell));
  mpz_class shifted = residue_ / pe;  // residue is canonical, so this is the digit shift
  return PadicInt(p_, precision_ - ell, shifted);
}

namespace {
void check_same_prime(const PadicInt& a, const PadicInt& b, const char* op) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument(std::string(op) + ": mismatched primes");
  }
}
}  // namespace

PadicInt PadicInt::add(const PadicInt& other) const {
  check_same_prime(*this, other, "add");
  int n = std::min(precision_, other.precision_);
  return PadicInt(p_, n, residue_ + other.residue_);
}

PadicInt PadicInt::sub(const PadicInt& other) const {
  check_same_prime(*this, other, "sub");
  int n = std::min(precision_, other.precision_);
  return PadicInt(p_, n, residue_ - other.residue_);
}

PadicInt PadicInt::mul(const PadicInt& other) const {
  check_same_prime(*this, other, "mul");
  int n = std::min(precision_, other.precision_);
  return PadicInt(p_, n, residue_ * other.residue_);
}

PadicInt PadicInt::negate() const { return PadicInt(p_, precision_, -residue_); }

PadicInt PadicInt::mul_integer(const mpz_class& k) const {
  if (k == 0) return PadicInt(p_, precision_, 0);
  long v = valuation_int(k, p_);
  int n = precision_ + static_cast<int>(v);
  return PadicInt(p_, n, residue_ * k);
}

PadicInt PadicInt::unit_inverse() const {
  Valuation v = valuation();
  if (!v.exact || v.v != 0) throw std::domain_error("unit_inverse: not a unit");
  mpz_class m = modulus();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t());
  return PadicInt(p_, precision_, inv);
}

PadicInt PadicInt::unit_pow(const PadicInt& w) const {
  check_same_prime(*this, w, "unit_pow");
  if (p_ == 2) {
    if (precision_ < 2) throw precision_error("unit_pow: need >= 2 digits to check base mod 4");
    if (mpz_fdiv_ui(residue_.get_mpz_t(), 4) != 1) {
      throw std::domain_error("unit_pow: base not = 1 (mod 4)");
    }
  } else {
    if (mpz_fdiv_ui(residue_.get_mpz_t(), static_cast<unsigned long>(p_)) != 1) {
      throw std::domain_error("unit_pow: base not a 1-unit");
    }
  }
  // u = 1 (mod p) gives u^{p^k} = 1 (mod p^{k+1}), so the integer
  // representative of w mod p^{N_w} pins u^w modulo p^{N_w + 1}.
  int n = std::min(precision_, w.precision_ + 1);
  mpz_class m = pow_p(p_, static_cast<unsigned>(n));
  mpz_class out;
  mpz_powm(out.get_mpz_t(), residue_.get_mpz_t(), w.residue_.get_mpz_t(), m.get_mpz_t());
  return PadicInt(p_, n, out);
}

PadicInt PadicInt::div_exact_p_power(int k) const {
  if (k < 0) throw std::invalid_argument("div_exact_p_power: negative power");
  if (k == 0) return *this;
  if (k >= precision_) throw precision_error("div_exact_p_power: precision exhausted");
  mpz_class pk = pow_p(p_, static_cast<unsigned>(k));
  if (!mpz_divisible_p(residue_.get_mpz_t(), pk.get_mpz_t())) {
    throw std::domain_error("div_exact_p_power: residue not divisible by p^k");
  }
  return PadicInt(p_, precision_ - k, residue_ / pk);
}

PadicInt PadicInt::with_precision(int m) const {
  if (m > precision_) throw precision_error("with_precision: cannot gain precision");
  return PadicInt(p_, m, residue_);
}

bool PadicInt::operator==(const PadicInt& other) const {
  return p_ == other.p_ && precision_ == other.precision_ && residue_ == other.residue_;
}

bool PadicInt::congruent(const PadicInt& other, int k) const {
  check_same_prime(*this, other, "congruent");
  if (k > precision_ || k > other.precision_) {
    throw precision_error("congruent: comparison beyond known precision");
  }
  mpz_class m = pow_p(p_, static_cast<unsigned>(k));
  return mpz_congruent_p(residue_.get_mpz_t(), other.residue_.get_mpz_t(), m.get_mpz_t()) != 0;
}

std::string PadicInt::str() const {
  std::ostringstream os;
  os << residue_ << " + O(" << p_ << "^" << precision_ << ")";
  return os.str();
}

std::string PadicInt::digit_str() const {
  DigitExpansion d = digits();
  std::ostringstream os;
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    if (i) os << ",";
    os << d.digits[i];
  }
  os << " + O(" << p_ << "^" << precision_ << ")";
  return os.str();
}

mpz_class residue_rep(const PadicInt& x, const PrimeContext& ctx) {
  if (x.prime() != ctx.p) throw std::invalid_argument("residue_rep: mismatched primes");
  if (x.precision() < static_cast<int>(ctx.t)) {
    throw precision_error("residue_rep: precision below t");
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.residue().get_mpz_t(), ctx.q.get_mpz_t());
  if (r == 0) r = ctx.q;
  return r;
}

PadicInt residue_rep_prime(const PadicInt& x, const PrimeContext& ctx) {
  mpz_class r = residue_rep(x, ctx);
  PadicInt shifted = x.sub(PadicInt::from_integer(r, ctx.p, x.precision()));
  return shifted.div_exact_p_power(static_cast<int>(ctx.t));
}

long valuation_int(const mpz_class& z, std::uint64_t p) {
  if (z == 0) throw std::invalid_argument("valuation_int: v_p(0) is infinite");
  mpz_class tmp;
  return static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

long valuation_rat(const mpq_class& r, std::uint64_t p) {
  if (r == 0) throw std::invalid_argument("valuation_rat: v_p(0) is infinite");
  return valuation_int(r.get_num(), p) - valuation_int(r.get_den(), p);
}

}  // namespace pgam
