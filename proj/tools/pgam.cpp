// pgam: exact q-adic factorials, p-adic gamma values, Mahler tables, and
// identity-verification sweeps on the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pgam/gamma.hpp"
#include "pgam/mahler.hpp"
#include "pgam/padic.hpp"
#include "pgam/qfactorial.hpp"
#include "pgam/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitPrecision = 3;

int default_precision() {
  if (const char* env = std::getenv("PGAM_DEFAULT_PREC")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid PGAM_DEFAULT_PREC\n";
  }
  return 12;
}

// x accepts a decimal integer, a rational "a/b", or a digit list "d0,d1,...".
pgam::PadicInt parse_padic(const std::string& text, std::uint64_t p, int precision) {
  if (text.find('/') != std::string::npos) {
    auto slash = text.find('/');
    mpz_class a(text.substr(0, slash));
    mpz_class b(text.substr(slash + 1));
    return pgam::PadicInt::from_rational(a, b, p, precision);
  }
  if (text.find(',') != std::string::npos) {
    mpz_class r = 0;
    mpz_class pw = 1;
    int digits = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      mpz_class d(item);
      if (d < 0 || d >= mpz_class(p)) {
        throw std::invalid_argument("digit out of range for base " + std::to_string(p));
      }
      r += pw * d;
      pw *= p;
      ++digits;
    }
    if (digits == 0) throw std::invalid_argument("empty digit list");
    return pgam::PadicInt(p, digits, r);
  }
  return pgam::PadicInt::from_integer(mpz_class(text), p, precision);
}

void print_value(const pgam::GammaValue& g, bool json) {
  if (json) {
    nlohmann::json j;
    j["residue"] = g.value.residue().get_str();
    j["p"] = g.value.prime();
    j["precision"] = g.value.precision();
    nlohmann::json digits = nlohmann::json::array();
    for (auto d : g.value.digits().digits) digits.push_back(d);
    j["digits"] = digits;
    if (g.exact) j["exact"] = g.exact->get_str();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << g.value.str() << "\n";
    std::cout << "digits: " << g.value.digit_str() << "\n";
    if (g.exact) std::cout << "exact: " << g.exact->get_str() << "\n";
  }
}

int emit_report(const pgam::verify::Report& rep, bool json, const std::string& out_path) {
  nlohmann::json j = rep.to_json();
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitBadArgs;
    }
    f << j.dump(2) << "\n";
  }
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "suite=" << rep.suite << " checked=" << rep.checked
              << " failures=" << rep.failures.size() << " elapsed_ms=" << rep.elapsed_ms << "\n";
    std::size_t shown = 0;
    for (const auto& f : rep.failures) {
      if (shown++ == 20) {
        std::cout << "  ... " << (rep.failures.size() - 20) << " more failures\n";
        break;
      }
      std::cout << "  FAIL " << f.input << ": observed " << f.observed << ", expected "
                << f.expected << "\n";
    }
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  }
  return rep.ok() ? kExitOk : kExitFailures;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    long v = std::stol(text);
    return {v, v};
  }
  return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-adic factorial / generalized p-adic gamma toolkit"};
  app.require_subcommand(1);

  // ---- factorial ----
  auto* cmd_fact = app.add_subcommand("factorial", "exact n!_q");
  std::uint64_t f_p = 2;
  unsigned f_t = 1;
  unsigned long f_n = 0;
  std::string f_variant = "qskip";
  cmd_fact->add_option("-p", f_p, "prime")->required();
  cmd_fact->add_option("-t", f_t, "exponent t in q = p^t")->default_val(1);
  cmd_fact->add_option("-n", f_n, "argument")->required();
  cmd_fact->add_option("--variant", f_variant, "qskip | coprime")
      ->check(CLI::IsMember({"qskip", "coprime"}));

  // ---- table ----
  auto* cmd_table = app.add_subcommand("table", "row of q-adic factorials 0..max");
  std::uint64_t tb_p = 2;
  unsigned tb_t = 1;
  long tb_max = 11;
  bool tb_json = false;
  cmd_table->add_option("-p", tb_p, "prime")->required();
  cmd_table->add_option("-t", tb_t, "exponent t")->default_val(1);
  cmd_table->add_option("--max", tb_max, "largest n")->required();
  cmd_table->add_flag("--json", tb_json, "machine-readable output");

  // ---- gamma-p ----
  auto* cmd_gp = app.add_subcommand("gamma-p", "Morita gamma value G_p(x)");
  std::uint64_t gp_p = 3;
  std::string gp_x;
  int gp_prec = 0;
  bool gp_json = false;
  cmd_gp->add_option("-p", gp_p, "prime")->required();
  cmd_gp->add_option("-x", gp_x, "integer, a/b, or digit list d0,d1,...")->required();
  cmd_gp->add_option("--prec", gp_prec, "working precision (digits)");
  cmd_gp->add_flag("--json", gp_json, "machine-readable output");

  // ---- gamma-q ----
  auto* cmd_gq = app.add_subcommand("gamma-q", "generalized gamma value G_q(x+1)");
  std::uint64_t gq_p = 3;
  unsigned gq_t = 1;
  std::string gq_x;
  int gq_prec = 0;
  bool gq_json = false;
  cmd_gq->add_option("-p", gq_p, "prime")->required();
  cmd_gq->add_option("-t", gq_t, "exponent t")->default_val(1);
  cmd_gq->add_option("-x", gq_x, "integer, a/b, or digit list d0,d1,...")->required();
  cmd_gq->add_option("--prec", gq_prec, "working precision (digits)");
  cmd_gq->add_flag("--json", gq_json, "machine-readable output");

  // ---- mahler ----
  auto* cmd_mahler = app.add_subcommand("mahler", "Mahler coefficients a_eta with valuations");
  std::uint64_t mh_p = 3;
  unsigned mh_t = 1;
  long mh_K = -1;
  bool mh_json = false;
  cmd_mahler->add_option("-p", mh_p, "prime")->required();
  cmd_mahler->add_option("-t", mh_t, "exponent t")->default_val(1);
  cmd_mahler->add_option("-K,--K", mh_K, "highest index")->required();
  cmd_mahler->add_flag("--json", mh_json, "machine-readable output");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "run an identity-verification sweep");
  std::string v_suite;
  cmd_verify
      ->add_option("suite", v_suite,
                   "wilson | ratio | ota | closed | functional | complement | "
                   "gauss-legendre | binomial-ratio | mahler | gf")
      ->required();
  std::string v_contexts, v_p_list, v_t_list, v_s_list, v_a_range, v_ncoef_list, v_r_list;
  long v_n_max = -1, v_x_max = -1, v_vn_max = -1, v_K = -1;
  int v_count = -1, v_prec = -1, v_deg = -1;
  unsigned v_m_max = 0;
  std::uint64_t v_seed = 0;
  bool v_json = false;
  bool v_skip_exp_relations = false;
  std::string v_out;
  cmd_verify->add_option("--contexts", v_contexts, "grid like 2:2,3:2,5:1");
  cmd_verify->add_option("--p", v_p_list, "prime list, e.g. 3,5,7");
  cmd_verify->add_option("--t", v_t_list, "t list, e.g. 1,2");
  cmd_verify->add_option("--s", v_s_list, "s list, e.g. 1,2");
  cmd_verify->add_option("--a", v_a_range, "window starts, e.g. 1..200");
  cmd_verify->add_option("--n-max", v_n_max, "largest n");
  cmd_verify->add_option("--vn-max", v_vn_max, "largest n for the valuation sweep");
  cmd_verify->add_option("--m-max", v_m_max, "largest m (ratio suite)");
  cmd_verify->add_option("--x-max", v_x_max, "largest integer x");
  cmd_verify->add_option("--count", v_count, "number of seeded residues");
  cmd_verify->add_option("--prec", v_prec, "working precision");
  cmd_verify->add_option("--deg", v_deg, "series degree (gf suite)");
  cmd_verify->add_option("-K,--K", v_K, "coefficient count (mahler suite)");
  cmd_verify->add_option("--ncoef", v_ncoef_list, "multiplication N list, e.g. 2,4");
  cmd_verify->add_option("--r", v_r_list, "r list (binomial-ratio suite)");
  cmd_verify->add_option("--seed", v_seed, "seed for residue draws")->default_val(0);
  cmd_verify->add_flag("--json", v_json, "emit the JSON report");
  cmd_verify->add_flag("--skip-exponent-relations", v_skip_exp_relations,
                       "closed suite: values only");
  cmd_verify->add_option("--out", v_out, "also write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*cmd_fact) {
      pgam::PrimeContext ctx(f_p, f_t, 1);
      auto variant = (f_variant == "coprime") ? pgam::FactorialVariant::Coprime
                                              : pgam::FactorialVariant::QSkip;
      std::cout << pgam::factorial_q(f_n, ctx, variant).get_str() << "\n";
      return kExitOk;
    }

    if (*cmd_table) {
      if (tb_max < 0) throw std::invalid_argument("--max must be >= 0");
      pgam::PrimeContext ctx(tb_p, tb_t, 1);
      std::vector<std::string> values;
      for (long n = 0; n <= tb_max; ++n) {
        values.push_back(pgam::factorial_q(static_cast<unsigned long>(n), ctx).get_str());
      }
      if (tb_json) {
        nlohmann::json j;
        j["p"] = tb_p;
        j["t"] = tb_t;
        j["q"] = ctx.q.get_str();
        j["n"] = nlohmann::json::array();
        j["values"] = nlohmann::json::array();
        for (long n = 0; n <= tb_max; ++n) {
          j["n"].push_back(n);
          j["values"].push_back(values[static_cast<std::size_t>(n)]);
        }
        std::cout << j.dump() << "\n";
      } else {
        std::string head = "n   ", row = "n!_q";
        for (long n = 0; n <= tb_max; ++n) {
          const std::string& v = values[static_cast<std::size_t>(n)];
          std::string ns = std::to_string(n);
          std::size_t w = std::max(ns.size(), v.size());
          head += "  " + std::string(w - ns.size(), ' ') + ns;
          row += "  " + std::string(w - v.size(), ' ') + v;
        }
        std::cout << head << "\n" << row << "\n";
      }
      return kExitOk;
    }

    if (*cmd_gp) {
      int prec = gp_prec > 0 ? gp_prec : default_precision();
      pgam::PadicInt x = parse_padic(gp_x, gp_p, prec);
      pgam::GammaValue g = pgam::gamma_p(x);
      // Attach the exact integer when the input is a literal integer point.
      if (gp_x.find('/') == std::string::npos && gp_x.find(',') == std::string::npos) {
        mpz_class n(gp_x);
        if (n >= 0 && n.fits_ulong_p()) g.exact = pgam::gamma_p_nat(n.get_ui(), gp_p);
      }
      print_value(g, gp_json);
      return kExitOk;
    }

    if (*cmd_gq) {
      int prec = gq_prec > 0 ? gq_prec : default_precision();
      pgam::PrimeContext ctx(gq_p, gq_t, prec);
      const bool integer_input =
          gq_x.find('/') == std::string::npos && gq_x.find(',') == std::string::npos;
      pgam::GammaValue g =
          integer_input ? pgam::gamma_q_of_integer(mpz_class(gq_x), ctx, prec)
                        : pgam::gamma_q(parse_padic(gq_x, gq_p, prec), ctx);
      print_value(g, gq_json);
      return kExitOk;
    }

    if (*cmd_mahler) {
      if (mh_K < 0) throw std::invalid_argument("-K must be >= 0");
      pgam::PrimeContext ctx(mh_p, mh_t, 1);
      pgam::MahlerCoefficients mc = pgam::mahler_coefficients(ctx, static_cast<int>(mh_K));
      if (mh_json) {
        nlohmann::json j;
        j["p"] = mh_p;
        j["t"] = mh_t;
        j["K"] = mh_K;
        j["coeffs"] = nlohmann::json::array();
        j["valuations"] = nlohmann::json::array();
        for (int eta = 0; eta <= mh_K; ++eta) {
          j["coeffs"].push_back(mc.coeffs[static_cast<std::size_t>(eta)].get_str());
          const auto& v = mc.valuations[static_cast<std::size_t>(eta)];
          if (v) {
            j["valuations"].push_back(*v);
          } else {
            j["valuations"].push_back(nullptr);
          }
        }
        std::cout << j.dump() << "\n";
      } else {
        for (int eta = 0; eta <= mh_K; ++eta) {
          const auto& v = mc.valuations[static_cast<std::size_t>(eta)];
          std::cout << "a_" << eta << " = " << mc.coeffs[static_cast<std::size_t>(eta)].get_str()
                    << "   v = " << (v ? std::to_string(*v) : "inf") << "\n";
        }
      }
      return kExitOk;
    }

    if (*cmd_verify) {
      using namespace pgam::verify;
      Report rep;
      auto odd_two_split = [&](std::vector<std::uint64_t>& odd, bool& two) {
        if (v_p_list.empty()) return;
        odd.clear();
        two = false;
        for (unsigned u : parse_unsigned_list(v_p_list)) {
          if (u == 2) {
            two = true;
          } else {
            odd.push_back(u);
          }
        }
      };

      if (v_suite == "wilson") {
        WilsonOptions opt;
        odd_two_split(opt.odd_primes, opt.include_two);
        if (!v_t_list.empty()) opt.odd_t = opt.two_t = parse_unsigned_list(v_t_list);
        if (!v_s_list.empty()) {
          auto s = parse_unsigned_list(v_s_list);
          opt.odd_s = s;
          opt.two_s.clear();
          for (unsigned u : s)
            if (u >= 3) opt.two_s.push_back(u);
          if (opt.two_s.empty()) opt.include_two = false;
        }
        if (!v_a_range.empty()) std::tie(opt.a_lo, opt.a_hi) = parse_range(v_a_range);
        rep = verify_wilson(opt);
      } else if (v_suite == "ratio") {
        RatioOptions opt;
        odd_two_split(opt.odd_primes, opt.include_two);
        if (!v_t_list.empty()) opt.odd_t = opt.two_t = parse_unsigned_list(v_t_list);
        if (!v_s_list.empty()) {
          auto s = parse_unsigned_list(v_s_list);
          opt.odd_s = s;
          opt.two_s.clear();
          for (unsigned u : s)
            if (u >= 3) opt.two_s.push_back(u);
          if (opt.two_s.empty()) opt.include_two = false;
        }
        if (v_n_max >= 0) opt.n_max = static_cast<unsigned long>(v_n_max);
        if (v_m_max > 0) opt.m_max = v_m_max;
        rep = verify_ratio(opt);
      } else if (v_suite == "ota") {
        OtaOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (v_n_max >= 0) opt.n_max = static_cast<unsigned long>(v_n_max);
        if (v_vn_max >= 0) opt.valuation_n_max = static_cast<unsigned long>(v_vn_max);
        rep = verify_ota(opt);
      } else if (v_suite == "closed") {
        ClosedOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (v_n_max >= 0) opt.n_max = static_cast<unsigned long>(v_n_max);
        if (!v_s_list.empty()) opt.s_values = parse_unsigned_list(v_s_list);
        opt.check_exponent_relations = !v_skip_exp_relations;
        rep = verify_closed(opt);
      } else if (v_suite == "functional") {
        FunctionalOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (v_x_max >= 0) opt.x_max = v_x_max;
        if (v_count >= 0) opt.residue_count = v_count;
        if (v_prec > 0) opt.precision = v_prec;
        opt.seed = v_seed;
        rep = verify_functional(opt);
      } else if (v_suite == "complement") {
        ComplementOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (v_count >= 0) opt.residue_count = v_count;
        opt.seed = v_seed;
        rep = verify_complement(opt);
      } else if (v_suite == "gauss-legendre") {
        GaussLegendreOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (!v_ncoef_list.empty()) opt.ncoefs = parse_unsigned_list(v_ncoef_list);
        if (v_x_max >= 0) opt.x_max = v_x_max;
        if (v_count >= 0) opt.residue_count = v_count;
        opt.seed = v_seed;
        rep = verify_gauss_legendre(opt);
      } else if (v_suite == "binomial-ratio") {
        BinomialRatioOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (!v_r_list.empty()) opt.r_values = parse_unsigned_list(v_r_list);
        rep = verify_binomial_ratio(opt);
      } else if (v_suite == "mahler") {
        MahlerOptions opt;
        if (!v_contexts.empty()) opt.contexts = parse_contexts(v_contexts);
        if (v_K >= 0) opt.K = static_cast<int>(v_K);
        if (v_count >= 0) opt.eval_residues = v_count;
        if (v_prec > 0) opt.eval_precision = v_prec;
        opt.seed = v_seed;
        rep = verify_mahler(opt);
      } else if (v_suite == "gf") {
        GfOptions opt;
        if (!v_p_list.empty() || !v_t_list.empty()) {
          std::vector<unsigned> ps =
              v_p_list.empty() ? std::vector<unsigned>{2, 3, 5} : parse_unsigned_list(v_p_list);
          std::vector<unsigned> ts =
              v_t_list.empty() ? std::vector<unsigned>{1} : parse_unsigned_list(v_t_list);
          opt.t1_primes.clear();
          opt.higher_contexts.clear();
          for (unsigned pp : ps) {
            for (unsigned tt : ts) {
              if (tt == 1) {
                opt.t1_primes.push_back(pp);
              } else {
                opt.higher_contexts.push_back({pp, tt});
              }
            }
          }
        }
        if (v_deg > 0) {
          opt.t1_degree = v_deg;
          opt.higher_degree = v_deg;
        }
        rep = verify_gf(opt);
      } else {
        std::cerr << "error: unknown suite '" << v_suite << "'\n";
        return kExitBadArgs;
      }
      return emit_report(rep, v_json, v_out);
    }
  } catch (const pgam::precision_error& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
