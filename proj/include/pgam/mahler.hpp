#pragma once

#include <optional>
#include <vector>

#include "pgam/gamma.hpp"
#include "pgam/padic.hpp"

namespace pgam {

// Truncated power series with exact rational coefficients c_0 .. c_D.
// All arithmetic is exact; everything above degree D is discarded.
class FormalSeries {
 public:
  explicit FormalSeries(int degree);
  FormalSeries(int degree, std::vector<mpq_class> coeffs);

  int degree() const { return degree_; }
  const mpq_class& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set_coeff(int i, const mpq_class& v);

  FormalSeries add(const FormalSeries& other) const;
  FormalSeries sub(const FormalSeries& other) const;
  FormalSeries mul(const FormalSeries& other) const;
  // Substitute x -> s x (s = +/-1 is all we need).
  FormalSeries substitute_sign(int s) const;
  // Formal exponential; requires zero constant term.
  FormalSeries exp() const;

  bool operator==(const FormalSeries& other) const;

 private:
  int degree_;
  std::vector<mpq_class> coeffs_;
};

// Exact Mahler coefficients a_eta of G_q(x+1) = sum a_eta binom(x, eta),
// computed as forward differences of the integer values G_q(k+1).
// valuations[eta] = v_p(a_eta), or nullopt when a_eta = 0.
struct MahlerCoefficients {
  std::uint64_t p = 0;
  unsigned t = 0;
  int K = 0;
  std::vector<mpz_class> coeffs;
  std::vector<std::optional<long>> valuations;
};

MahlerCoefficients mahler_coefficients(const PrimeContext& ctx, int K);

// binom(x, k) on Z_p; precision drops by exactly v_p(k!).
PadicInt binomial_eval(const PadicInt& x, unsigned k);

// Exact integer partial sum sum_{eta <= K} a_eta binom(r, eta) at the
// canonical residue r of x.
mpz_class mahler_partial_sum(const PadicInt& x, const MahlerCoefficients& mc, int K);

// Partial sum sum_{eta <= K} a_eta binom(x, eta).  Computed exactly from the
// canonical residue; the reported precision is min over the terms of
// N - floor(log_p eta) + v_p(a_eta), the sharp bound for how far an O(p^N)
// change of x can move each term.
PadicInt mahler_evaluate(const PadicInt& x, const MahlerCoefficients& mc, int K);

// delta_q = sum_{lambda < q} (-x)^lambda (-1)^t (-p)^{v_p(lambda!)}, as printed.
FormalSeries delta_series(const PrimeContext& ctx, int D);

// The source identity leaves three sign choices ambiguous; the scan covers
// all eight combinations.
struct SignConvention {
  bool delta_negated_x = false;  // (-x)^lambda instead of x^lambda in delta
  bool exp_negated_x = false;    // substitute x -> -x inside the exponential
  bool t_sign_in_delta = false;  // keep the (-1)^t factor inside delta
};

// exp((sx)^q/q + sx) * delta-variant, truncated at D.
FormalSeries lhs_series(const PrimeContext& ctx, int D, const SignConvention& conv);

// sum_eta (-1)^{eta+t} a_eta x^eta / eta!.
FormalSeries rhs_series(const MahlerCoefficients& mc, int D);

struct ConventionReport {
  SignConvention conv;
  bool exact = false;
  int first_mismatch = -1;  // -1 when exact through degree D
  // v_p(lhs_d - rhs_d) per degree; nullopt when the difference is zero.
  std::vector<std::optional<long>> diff_valuations;
  bool is_classical = false;  // the t = 1 exact convention
  bool is_paper_verbatim = false;
};

struct GfReport {
  std::uint64_t p = 0;
  unsigned t = 0;
  int degree = 0;
  std::vector<ConventionReport> conventions;
  int best_index = -1;       // longest exact prefix, ties to lower index
  int classical_index = -1;  // where the t=1-consistent convention landed
  bool classical_exact = false;
};

// Compares lhs and rhs coefficient-wise for every convention in the scan.
GfReport gf_compare(const PrimeContext& ctx, int D);

}  // namespace pgam
