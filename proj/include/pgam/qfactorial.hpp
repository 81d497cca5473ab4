#pragma once

#include "pgam/padic.hpp"

namespace pgam {

// The source definition writes the skip predicate as "(q, j) = 1" but uses
// "q does not divide j" when computing tables and factorization formulas.
// For q = p^t these genuinely differ, so both live here:
//   QSkip   - skip exactly the j divisible by q (reproduces the tables),
//   Coprime - skip exactly the j with gcd(j, q) != 1, i.e. p | j (the
//             variant under which the Wilson-type congruences hold).
enum class FactorialVariant { QSkip, Coprime };

// n!_p = product of 1 <= j <= n coprime to p; 0!_p = 1.
mpz_class factorial_p(unsigned long n, std::uint64_t p);

// n!_q with the chosen skip predicate; 0!_q = 1.
mpz_class factorial_q(unsigned long n, const PrimeContext& ctx,
                      FactorialVariant variant = FactorialVariant::QSkip);

// Product of j in [a, a + length - 1] passing the variant's predicate, a >= 1.
mpz_class range_product(const mpz_class& a, unsigned long length,
                        const PrimeContext& ctx, FactorialVariant variant);

enum class WilsonVerdict { HoldsMinusOne, HoldsPlusOne, Fails };

struct WilsonResult {
  WilsonVerdict verdict = WilsonVerdict::Fails;
  mpz_class residue;  // the length-p^s product mod p^s
};

// Wilson-type congruence for the window [a, a + p^s - 1] under the Coprime
// predicate: expects -1 (mod p^s) for odd p, +1 (mod 2^s) for p = 2, s >= 3.
WilsonResult wilson_check(const mpz_class& a, unsigned s, const PrimeContext& ctx);

struct RatioResult {
  bool holds = false;
  mpz_class observed;  // ratio mod p^s
  mpz_class expected;
};

// (n + m p^s)!_q / n!_q = (-1)^m (mod p^s) for odd p; = 1 (mod 2^s) for p = 2.
// Coprime variant; exact integer ratio reduced afterwards.
RatioResult ratio_congruence(unsigned long n, unsigned m, unsigned s,
                             const PrimeContext& ctx);

struct NormReport {
  mpq_class factorial_norm;   // |n!_q|_p
  mpq_class combined_norm;    // |(n+p^s)!_q +/- n!_q|_p  (+ for odd p, - for p = 2)
  mpq_class bound;            // 1/p^s
  bool unit_norm_holds = false;
  bool bound_holds = false;
};

// Evaluates the norm bounds that follow from the ratio congruences.
NormReport corollary_norms(unsigned long n, unsigned s, const PrimeContext& ctx);

}  // namespace pgam
