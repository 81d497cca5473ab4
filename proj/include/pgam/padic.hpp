#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgam {

// Thrown when an operation cannot be carried out at the precision of its
// inputs (digit shifts past the known window, division eating all digits,
// representative extraction below t digits, ...).  The CLI maps this to a
// dedicated exit code, distinct from plain bad-argument errors.
class precision_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// p^n as an exact integer, n >= 0.
mpz_class pow_p(std::uint64_t p, unsigned n);

// The triple (p, t, q = p^t) plus the default working precision (number of
// known base-p digits).  Validated once, then shared by value everywhere.
struct PrimeContext {
  std::uint64_t p = 0;
  unsigned t = 0;
  mpz_class q;
  int default_precision = 0;

  PrimeContext(std::uint64_t p_, unsigned t_, int default_precision_);
};

PrimeContext make_context(std::uint64_t p, unsigned t, int default_precision);

// Base-p digit vector x_0, ..., x_{N-1} of a residue, with its digit sum.
struct DigitExpansion {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> digits;
  mpz_class digit_sum;
};

// Valuation of a truncated element.  When the residue is zero we only know
// v >= precision; `exact` records which case we are in.
struct Valuation {
  int v = 0;
  bool exact = true;
};

// |x|_p as an exact rational; an upper bound when the valuation is inexact.
struct AbsValue {
  mpq_class value;
  bool exact = true;
};

// An element of Z_p known modulo p^N: a residue in [0, p^N) together with
// the precision N >= 1.  Values are immutable; every operation returns a
// fresh value and states its precision rule.  Precision is only ever lost
// explicitly: h_ell costs ell digits, division by p^k costs k digits.
class PadicInt {
 public:
  PadicInt(std::uint64_t p, int precision, mpz_class residue);

  static PadicInt from_integer(const mpz_class& z, std::uint64_t p, int precision);
  // a/b with p not dividing b; anything else is not a p-adic integer.
  static PadicInt from_rational(const mpz_class& a, const mpz_class& b,
                                std::uint64_t p, int precision);

  std::uint64_t prime() const { return p_; }
  int precision() const { return precision_; }
  const mpz_class& residue() const { return residue_; }
  mpz_class modulus() const { return pow_p(p_, static_cast<unsigned>(precision_)); }

  bool is_zero_residue() const { return residue_ == 0; }

  Valuation valuation() const;
  AbsValue abs_p() const;
  DigitExpansion digits() const;

  // Digit shift h_ell: drops the low ell digits, precision N - ell.
  PadicInt h_ell(int ell) const;

  // Ring operations at precision min(N_x, N_y).
  PadicInt add(const PadicInt& other) const;
  PadicInt sub(const PadicInt& other) const;
  PadicInt mul(const PadicInt& other) const;
  PadicInt negate() const;

  // Multiplication by an exact integer k != 0: absolute precision improves
  // to N + v_p(k) because the error term is scaled by k as well.
  PadicInt mul_integer(const mpz_class& k) const;

  // x^{-1} for units (valuation 0).
  PadicInt unit_inverse() const;

  // this^w for a 1-unit base (p odd: base = 1 mod p; p = 2: base = 1 mod 4),
  // where w is a p-adic integer exponent.  Result precision min(N, N_w + 1).
  PadicInt unit_pow(const PadicInt& w) const;

  // Exact division by p^k; requires the low k digits to vanish.
  PadicInt div_exact_p_power(int k) const;

  // Truncate to a smaller precision m <= N.
  PadicInt with_precision(int m) const;

  // Strict equality: same p, same precision, same residue.
  bool operator==(const PadicInt& other) const;
  bool operator!=(const PadicInt& other) const { return !(*this == other); }

  // Congruence modulo p^k (k <= both precisions).
  bool congruent(const PadicInt& other, int k) const;

  std::string str() const;        // "r + O(p^N)"
  std::string digit_str() const;  // "d0,d1,...,d{N-1} + O(p^N)"

 private:
  std::uint64_t p_;
  int precision_;
  mpz_class residue_;
};

inline PadicInt operator+(const PadicInt& a, const PadicInt& b) { return a.add(b); }
inline PadicInt operator-(const PadicInt& a, const PadicInt& b) { return a.sub(b); }
inline PadicInt operator*(const PadicInt& a, const PadicInt& b) { return a.mul(b); }
inline PadicInt operator-(const PadicInt& a) { return a.negate(); }

// R_t(x): the representative of x mod q in {1, ..., q} (q itself for x = 0).
// Needs at least t known digits.
mpz_class residue_rep(const PadicInt& x, const PrimeContext& ctx);

// R'_t(x) = (x - R_t(x)) / q, at precision N - t.
PadicInt residue_rep_prime(const PadicInt& x, const PrimeContext& ctx);

// v_p of an exact nonzero integer / rational.
long valuation_int(const mpz_class& z, std::uint64_t p);
long valuation_rat(const mpq_class& r, std::uint64_t p);

}  // namespace pgam
