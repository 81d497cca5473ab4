#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgam/gamma.hpp"
#include "pgam/mahler.hpp"
#include "pgam/padic.hpp"
#include "pgam/qfactorial.hpp"

namespace pgam::verify {

struct Failure {
  std::string input;
  std::string observed;
  std::string expected;
};

struct Report {
  std::string suite;
  nlohmann::json grid;
  long checked = 0;
  std::vector<Failure> failures;
  long elapsed_ms = 0;
  std::vector<std::string> notes;  // informational lines (gf conventions etc.)

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// (p, t) pairs; parses "2:2,3:2,5:1".
using ContextGrid = std::vector<std::pair<std::uint64_t, unsigned>>;
ContextGrid parse_contexts(const std::string& spec);
ContextGrid default_context_grid();  // {(2,2),(2,3),(3,1),(3,2),(5,1),(5,2)}

// Deterministic residue stream for a context: digits drawn from a
// seed-derived mt19937_64, so reports are reproducible given (grid, seed).
std::vector<mpz_class> seeded_residues(const PrimeContext& ctx, int precision,
                                       int count, std::uint64_t seed);

struct WilsonOptions {
  std::vector<std::uint64_t> odd_primes{3, 5, 7};
  std::vector<unsigned> odd_t{1, 2};
  std::vector<unsigned> odd_s{1, 2};
  std::vector<unsigned> two_t{1, 2, 3};
  std::vector<unsigned> two_s{3, 4};
  long a_lo = 1, a_hi = 200;
  bool include_two = true;
};
Report verify_wilson(const WilsonOptions& opt = {});

struct RatioOptions {
  std::vector<std::uint64_t> odd_primes{3, 5, 7};
  std::vector<unsigned> odd_t{1, 2};
  std::vector<unsigned> odd_s{1, 2};
  std::vector<unsigned> two_t{1, 2, 3};
  std::vector<unsigned> two_s{3, 4};
  unsigned long n_max = 100;
  unsigned m_max = 3;
  bool include_two = true;
};
Report verify_ratio(const RatioOptions& opt = {});

struct OtaOptions {
  ContextGrid contexts = default_context_grid();
  unsigned long n_max = 500;
  unsigned long valuation_n_max = 2000;
};
Report verify_ota(const OtaOptions& opt = {});

struct ClosedOptions {
  ContextGrid contexts = default_context_grid();
  unsigned long n_max = 500;
  std::vector<unsigned> s_values{1, 2};
  bool check_exponent_relations = true;
};
Report verify_closed(const ClosedOptions& opt = {});

struct FunctionalOptions {
  ContextGrid contexts = default_context_grid();
  long x_max = 300;
  int residue_count = 100;
  int precision = 8;
  std::uint64_t seed = 0;
};
Report verify_functional(const FunctionalOptions& opt = {});

struct ComplementOptions {
  ContextGrid contexts = default_context_grid();
  int residue_count = 200;
  std::uint64_t seed = 0;
  // Corollary half-value check grid (the sweep above is the formula check).
  std::vector<std::uint64_t> corollary_primes{3, 5, 7};
  std::vector<unsigned> corollary_t{1, 2, 3};
  bool check_corollary = true;
};
Report verify_complement(const ComplementOptions& opt = {});

struct GaussLegendreOptions {
  ContextGrid contexts{{3, 1}, {3, 2}, {5, 1}, {5, 2}};
  std::vector<unsigned> ncoefs{2, 4};
  long x_max = 50;
  int residue_count = 20;
  std::uint64_t seed = 0;
  bool check_roots_product = true;
};
Report verify_gauss_legendre(const GaussLegendreOptions& opt = {});

struct BinomialRatioOptions {
  ContextGrid contexts{{2, 2}, {3, 2}, {5, 1}};
  std::vector<unsigned> r_values{1, 2, 3};
};
Report verify_binomial_ratio(const BinomialRatioOptions& opt = {});

struct MahlerOptions {
  ContextGrid contexts = default_context_grid();
  int K = 200;
  int reconstruction_max = 100;
  int eval_terms = 100;
  int eval_residues = 20;
  int eval_precision = 12;
  int eval_match_digits = 6;
  std::uint64_t seed = 0;
};
Report verify_mahler(const MahlerOptions& opt = {});

struct GfOptions {
  std::vector<std::uint64_t> t1_primes{2, 3, 5};
  int t1_degree = 30;
  ContextGrid higher_contexts{{2, 2}, {2, 3}, {3, 2}, {5, 2}};
  int higher_degree = 20;
};
Report verify_gf(const GfOptions& opt = {});

}  // namespace pgam::verify
