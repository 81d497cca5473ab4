#pragma once

#include <optional>
#include <vector>

#include "pgam/padic.hpp"
#include "pgam/qfactorial.hpp"

namespace pgam {

// ---------------------------------------------------------------------------
// Morita gamma on naturals and on Z_p.
// ---------------------------------------------------------------------------

// G_p(n) = (-1)^n * prod_{1 <= j <= n-1, p!j} j, exact; G_p(0) = 1.
mpz_class gamma_p_nat(unsigned long n, std::uint64_t p);

// G_p(m) mod p^N for an integer representative 0 <= m < p^N.
mpz_class gamma_p_mod(const mpz_class& m, std::uint64_t p, int N);

// A gamma value: a unit of Z_p at some precision, plus the exact signed
// integer when the argument was an integer point.
struct GammaValue {
  PadicInt value;
  std::optional<mpz_class> exact;
};

// G_p(x) for x in Z_p, via the integer representative of x mod p^N.
// Sound at full precision for odd p; for p = 2 requires N >= 3.
GammaValue gamma_p(const PadicInt& x);

// Closed forms for G_p(n+1): the n!/([n/p]! p^[n/p]) form and the
// (np+k) decomposition form.  Both must match gamma_p_nat(n+1).
struct GammaPClosedReport {
  mpq_class quotient_form;   // (-1)^{n+1} n! / ([n/p]! p^[n/p])
  mpq_class decomposed_form; // n = n'p + k with 0 <= k < p
  mpz_class reference;       // gamma_p_nat(n+1)
  bool all_equal = false;
};
GammaPClosedReport gamma_p_closed(unsigned long n, std::uint64_t p);

// Reassembles n! from gamma values along the base-p digit ladder.
mpz_class factorial_via_gamma(unsigned long n, std::uint64_t p);

// ---------------------------------------------------------------------------
// Generalized gamma G_q, q = p^t.
// ---------------------------------------------------------------------------

// G_q(n+1) = prod_{l < t} G_p(floor(n / p^l) + 1), exact signed integer.
mpz_class gamma_q_nat(unsigned long n, const PrimeContext& ctx);

// G_q(x+1) = prod_{l < t} G_p(h_l(x) + 1) at precision N - t + 1.
// Odd p needs N >= t; p = 2 needs N >= t + 2 (every factor keeps >= 3 digits).
GammaValue gamma_q(const PadicInt& x, const PrimeContext& ctx);

// G_q at the point y itself (i.e. gamma_q shifted back by one).
GammaValue gamma_q_at(const PadicInt& y, const PrimeContext& ctx);

// Integer-argument convenience carrying the exact witness; n may be negative
// (n = -1 gives the exact anchor G_q(0) = 1, lower n only the residue value).
GammaValue gamma_q_of_integer(const mpz_class& n, const PrimeContext& ctx, int precision);

// Exponents of the factorial formula G_q(n+1) = (-1)^{A_n} p^{-B_n} n!_q:
//   A_n = t + sum_{i=0}^{t-1} floor(n/p^i)
//   B_n = sum_{i=1}^{t} floor(n/p^i) - t floor(n/p^t)
// B_n is exactly v_p(n!_q) for the QSkip factorial.
struct ExponentPair {
  mpz_class A;
  mpz_class B;
};
ExponentPair exponents(unsigned long n, const PrimeContext& ctx);

// (-1)^{A_n} p^{-B_n} n!_q as an exact rational (in fact an integer).
mpq_class ota_gamma(unsigned long n, const PrimeContext& ctx);

// Closed forms for G_q(n+1) built on n! instead of n!_q.
enum class ClosedCase { General, MqLambda, QPowSMinus1, QPowS };
mpq_class gamma_q_closed(unsigned long n, const PrimeContext& ctx,
                         ClosedCase c = ClosedCase::General);

// Case exponents for n = q^s - 1 and n = q^s (value-consistent forms).
ExponentPair exponents_q_pow_s_minus_1(unsigned s, const PrimeContext& ctx);
ExponentPair exponents_q_pow_s(unsigned s, const PrimeContext& ctx);

// ---------------------------------------------------------------------------
// Functional equation, complement, multiplication, binomial ratios.
// ---------------------------------------------------------------------------

enum class FunctionalBranch { UnitDigitShift, QMultiple };

struct FunctionalStepResult {
  PadicInt predicted;  // the value G_q(x+1) built from G_q(x)
  FunctionalBranch branch = FunctionalBranch::QMultiple;
  int k = 0;  // v_p(x) when the digit-shift branch applies
};

// G_q(x+1) = (-1)^{k+1} h_k(x) G_q(x) when x is not in qZ_p (k = v_p(x)),
// and (-1)^t G_q(x) when x is in qZ_p.  Needs precision >= t to decide.
FunctionalStepResult functional_step(const PadicInt& x, const PrimeContext& ctx);

struct ComplementResult {
  PadicInt lhs;      // G_q(x) G_q(1-x)
  int rhs_sign = 1;  // the predicted +/-1
  int branch = 0;    // 0: odd p; 1/2: the two p = 2 cases
  bool equal = false;
};

// Reflection product G_q(x) G_q(1-x) against its sign formula.
// Precision >= t + 1 (p = 2 reads the digit of 2^t).
ComplementResult complement(const PadicInt& x, const PrimeContext& ctx);

struct GaussLegendreResult {
  PadicInt lhs;
  PadicInt rhs;
  bool equal = false;
};

// Multiplication identity
//   G_q(x) prod_i G_q(i/N) / prod_i G_q((x+i)/N) = N^{R_t(x)-1} (N^{q-1})^{R'_t(x)}
// for N >= 2 coprime to p.  The printed source form has an extra factor x in
// the second exponent; that version fails its own telescoping recurrence
// (e.g. p = 3, t = 1, N = 2, x = 4: lhs = 4 but 2^{8} = 13 mod 27), while the
// form above follows from the functional equation and verifies everywhere.
// Odd p only; for p = 2 use the integer-argument overload.
GaussLegendreResult gauss_legendre(const PadicInt& x, unsigned ncoef,
                                   const PrimeContext& ctx);
GaussLegendreResult gauss_legendre(const mpz_class& n, unsigned ncoef,
                                   const PrimeContext& ctx, int precision);

struct RootsProductResult {
  PadicInt z;  // prod_{j=1}^{N-1} G_q(j/N)
  bool fourth_power_is_one = false;
};

// The full product of division values is a fourth root of unity.
RootsProductResult roots_product(unsigned ncoef, const PrimeContext& ctx, int precision);

struct BinomialRatioResult {
  mpq_class lhs;        // binom(n_r, m_r) / binom(n_{r-1}, m_{r-1})
  mpq_class rhs_first;  // (-1)^t (-p)^{v} G_q(1+n_r) / (G_q(1+m_r) G_q(1+n_r-m_r))
  bool first_equal = false;
  PadicInt second_lhs;  // lhs embedded at working precision
  PadicInt second_rhs;  // (-p)^{v} G_q(-m_r) G_q(m_r-n_r) / G_q(-n_r)
  bool second_equal = false;
  mpz_class n_r, m_r;
};

// Ratio identity along n_r = b (q^r - 1)/(q - 1), m_r = a (q^r - 1)/(q - 1),
// 0 < a < b < q - 1, r >= 1.  First form compared exactly, second form at
// the given working precision via negative-integer embeddings.
BinomialRatioResult binomial_ratio(unsigned a, unsigned b, unsigned r,
                                   const PrimeContext& ctx, int precision);

struct LipschitzReport {
  mpq_class input_distance;   // |x - y|_p  (0 when x == y at precision)
  mpq_class gamma_distance;   // |G_q(x) - G_q(y)|_p
  bool input_distance_exact = true;
  bool gamma_distance_exact = true;
  bool upper_clause_applies = false;  // |x - y|_p = 1
  bool upper_clause_holds = false;
  bool lower_observed = false;        // measured only, never asserted
};

// Measures both sides of the Lipschitz-type clauses; only the |x-y|_p = 1
// upper bound is a theorem here, the lower clause is recorded per instance.
LipschitzReport lipschitz_probe(const PadicInt& x, const PadicInt& y,
                                const PrimeContext& ctx);

// Prefix table G_p(0..max_n) for sweeps; index m holds gamma_p_nat(m).
std::vector<mpz_class> gamma_p_table(unsigned long max_n, std::uint64_t p);

}  // namespace pgam
