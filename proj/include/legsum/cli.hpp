#pragma once

// Command-line front end: one subcommand per experiment, CSV or JSON on stdout.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alpha.hpp"
#include "charsum.hpp"
#include "constants.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "moments.hpp"
#include "montecarlo.hpp"
#include "parallel.hpp"
#include "series.hpp"
#include "table.hpp"
#include "tails.hpp"

namespace legsum::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string format = "csv";
  std::string out_path;
  unsigned threads = default_threads();
  std::uint64_t seed = 0;
};

namespace detail {

inline std::string cplx_string(cplx v) {
  if (v.imag() == 0) return format_double(v.real());
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") + format_double(std::fabs(v.imag())) + "i";
}

inline std::string character_values(const Character& c) {
  std::string s;
  for (std::uint64_t n = 0; n < c.period; ++n) s += (n ? " " : "") + cplx_string(c.values[n]);
  return s;
}

inline std::vector<Parity> parities(const std::string& which) {
  if (which == "both") return {Parity::kPlus, Parity::kMinus};
  return {parse_parity(which)};
}

}  // namespace detail

/// Runs the CLI. Returns 0 on success, 1 when a --verify style check fails,
/// 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Partial sums of Legendre symbols and their random multiplicative model"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "Also write output to this file");
  app.add_option("--threads", cfg.threads, "Worker threads (default: LEGSUM_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  // density
  auto* density = app.add_subcommand("density", "Count primes with L(alpha,p) >= 0 / > 0 among the first N primes");
  std::vector<std::string> density_alphas;
  std::size_t density_primes = 1000;
  std::string density_mode = "ge";
  std::optional<std::uint64_t> density_verify;
  density->add_option("--alpha", density_alphas, "alpha as a/b (exact) or decimal")->required();
  density->add_option("--primes", density_primes, "Number of primes, starting at 2")->check(CLI::PositiveNumber);
  density->add_option("--mode", density_mode, "ge: L >= 0, gt: L > 0")->check(CLI::IsMember({"ge", "gt"}));
  density->add_option("--verify", density_verify, "Expected count; exit 1 on mismatch");

  // dirichlet
  auto* dirichlet = app.add_subcommand("dirichlet", "Check L(1/2,p) against (2-(2/p)) h(-p)");
  std::uint64_t dirichlet_max = 2000;
  dirichlet->add_option("--max-prime", dirichlet_max, "Largest prime checked");

  // fourier-check
  auto* fourier = app.add_subcommand("fourier-check", "Compare the truncated Fourier series with the exact sum");
  std::string fourier_alpha;
  std::vector<std::uint64_t> fourier_primes;
  std::vector<std::uint64_t> fourier_ms = {1000, 100000};
  fourier->add_option("--alpha", fourier_alpha)->required();
  fourier->add_option("--prime", fourier_primes, "Odd prime(s)")->required();
  fourier->add_option("--truncation", fourier_ms, "Truncation(s) M");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo positivity of the model series");
  std::string sim_alpha, sim_parity = "both", sim_evaluator;
  std::uint64_t sim_samples = 1000;
  std::size_t sim_truncation = 100000;
  std::uint64_t sim_cutoff = 1000;
  simulate->add_option("--alpha", sim_alpha)->required();
  simulate->add_option("--parity", sim_parity)->check(CLI::IsMember({"plus", "minus", "both"}));
  simulate->add_option("--samples", sim_samples)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed);
  simulate->add_option("--truncation", sim_truncation, "N for the direct series")->check(CLI::PositiveNumber);
  simulate->add_option("--prime-cutoff", sim_cutoff, "P for Euler products")->check(CLI::PositiveNumber);
  simulate->add_option("--evaluator", sim_evaluator, "series or euler (default: euler when alpha has a decomposition)")
      ->check(CLI::IsMember({"series", "euler"}));

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Print the character decomposition of a+-(alpha)");
  std::string dec_alpha, dec_parity = "both";
  decompose->add_option("--alpha", dec_alpha)->required();
  decompose->add_option("--parity", dec_parity)->check(CLI::IsMember({"plus", "minus", "both"}));

  // moments
  auto* moments = app.add_subcommand("moments", "Exact vs Monte Carlo moments of the truncated series");
  std::string mom_alpha, mom_parity = "both";
  int mom_max_k = 4;
  std::uint64_t mom_samples = 10000;
  std::size_t mom_truncation = 1000;
  moments->add_option("--alpha", mom_alpha)->required();
  moments->add_option("--parity", mom_parity)->check(CLI::IsMember({"plus", "minus", "both"}));
  moments->add_option("--max-k", mom_max_k)->check(CLI::Range(1, 6));
  moments->add_option("--samples", mom_samples)->check(CLI::PositiveNumber);
  moments->add_option("--truncation", mom_truncation)->check(CLI::PositiveNumber);
  moments->add_option("--seed", cfg.seed);

  // certify
  auto* certify = app.add_subcommand("certify", "Lower bound on c(alpha) for alpha near 1/3");
  std::string cert_alpha, cert_policy = "conservative";
  certify->add_option("--alpha", cert_alpha)->required();
  certify->add_option("--constants", cert_policy, "printed, recomputed or conservative")
      ->check(CLI::IsMember({"printed", "recomputed", "conservative"}));

  // constants
  auto* constants = app.add_subcommand("constants", "Recomputed vs quoted constants");
  std::uint64_t const_sigma_cutoff = 1'000'000, const_xi_cutoff = 10'000'000;
  constants->add_option("--sigma-cutoff", const_sigma_cutoff)->check(CLI::Range(100ull, 1ull << 40));
  constants->add_option("--xi-cutoff", const_xi_cutoff)->check(CLI::Range(100ull, 1ull << 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const Format format = cfg.format == "json" ? Format::kJson : Format::kCsv;
  std::ostringstream body;
  int status = kOk;

  try {
    if (*density) {
      std::vector<Alpha> alphas;
      for (const auto& a : density_alphas) alphas.push_back(Alpha::parse(a));
      if (density_verify && alphas.size() != 1) throw CLI::ValidationError("--verify", "needs exactly one --alpha");
      const Comparison mode = density_mode == "ge" ? Comparison::kNonNegative : Comparison::kPositive;
      const auto reports = density_scan_many(alphas, density_primes, mode, cfg.threads);
      Table t{{"alpha", "primes", "nonneg", "strictpos", "zero", "nonneg_1mod4", "nonneg_3mod4", "mode"}, {}};
      for (const auto& r : reports) {
        t.add({r.alpha, r.prime_count, r.nonneg_count, r.strict_pos_count, r.zero_count, r.nonneg_1mod4,
               r.nonneg_3mod4, std::string(comparison_name(r.mode))});
        if (r.boundary_hits > 0)
          err << "warning: alpha=" << r.alpha << " hit an integer boundary for " << r.boundary_hits << " prime(s)\n";
      }
      t.write(body, format);
      if (density_verify && reports.front().selected_count() != *density_verify) {
        err << "verify failed: alpha=" << reports.front().alpha << " count " << reports.front().selected_count()
            << " != expected " << *density_verify << '\n';
        status = kCheckFailed;
      }
    } else if (*dirichlet) {
      Table t{{"p", "lhs", "rhs", "status"}, {}};
      for (std::uint64_t p : sieve_primes(std::max<std::uint64_t>(dirichlet_max, 2))) {
        if (p == 2) continue;
        const DirichletCheck c = dirichlet_check(p);
        const char* s = c.excluded ? "excluded" : (c.pass ? "pass" : "fail");
        if (!c.excluded && !c.pass) status = kCheckFailed;
        t.add({p, c.lhs, c.rhs, std::string(s)});
      }
      t.write(body, format);
    } else if (*fourier) {
      const Alpha alpha = Alpha::parse(fourier_alpha);
      Table t{{"alpha", "p", "M", "exact", "truncated", "abs_error", "imag"}, {}};
      for (std::uint64_t p : fourier_primes) {
        const std::int64_t exact = legendre_sum(alpha, p);
        for (std::uint64_t M : fourier_ms) {
          const FourierPartial f = fourier_partial(alpha, p, M);
          t.add({alpha.to_string(), p, M, exact, f.value, std::fabs(f.value - static_cast<double>(exact)), f.imag});
        }
      }
      t.write(body, format);
    } else if (*simulate) {
      const Alpha alpha = Alpha::parse(sim_alpha);
      const bool can_decompose = alpha.exact() && decomposition_supported(alpha.exact()->den) &&
                                 alpha.exact()->num >= 0 && alpha.exact()->num < alpha.exact()->den;
      std::string evaluator = sim_evaluator.empty() ? (can_decompose ? "euler" : "series") : sim_evaluator;
      if (evaluator == "euler" && !can_decompose)
        throw UnsupportedAlphaError("euler evaluator needs a rational alpha with denominator in {1,2,3,4,5,6,8,12}");
      Table t{{"alpha", "parity", "evaluator", "samples", "strict_pos", "nonneg", "c_strict", "c_nonneg", "ci_low",
               "ci_high", "mean", "stderr"},
              {}};
      std::vector<PositivityEstimate> estimates;
      for (Parity parity : detail::parities(sim_parity)) {
        SampleEvaluator eval;
        double scale = 2;
        if (evaluator == "euler") {
          const auto decomp = decompose_rational(*alpha.exact(), parity);
          scale = decomp.scale();
          eval = euler_evaluator(decomp, sim_cutoff);
        } else {
          eval = series_evaluator({parity, alpha}, sim_truncation);
        }
        const auto e = estimate_positivity(eval, {sim_samples, cfg.seed, cfg.threads}, positivity_tolerance(scale));
        const Interval ci = e.ci_strict();
        t.add({alpha.to_string(), std::string(parity_name(parity)), evaluator, e.samples, e.strict_pos, e.nonneg,
               e.frac_strict(), e.frac_nonneg(), ci.low, ci.high, e.mean, e.stderr_mean});
        estimates.push_back(e);
      }
      if (estimates.size() == 2) {
        t.add({alpha.to_string(), std::string("combined"), evaluator, sim_samples, std::monostate{}, std::monostate{},
               (estimates[0].frac_strict() + estimates[1].frac_strict()) / 2,
               (estimates[0].frac_nonneg() + estimates[1].frac_nonneg()) / 2, std::monostate{}, std::monostate{},
               std::monostate{}, std::monostate{}});
      }
      t.write(body, format);
    } else if (*decompose) {
      const Alpha alpha = Alpha::parse(dec_alpha);
      if (!alpha.exact()) throw UnsupportedAlphaError("decompose needs a rational alpha a/b");
      Table t{{"alpha", "parity", "term", "coeff_re", "coeff_im", "character", "period", "dilation", "values"}, {}};
      for (Parity parity : detail::parities(dec_parity)) {
        const auto d = decompose_rational(*alpha.exact(), parity);
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
          const auto& term = d.terms[i];
          t.add({alpha.to_string(), std::string(parity_name(parity)), static_cast<std::uint64_t>(i),
                 term.coeff.real(), term.coeff.imag(), term.chi.name, term.chi.period, term.dilation,
                 detail::character_values(term.chi)});
        }
      }
      t.write(body, format);
    } else if (*moments) {
      const Alpha alpha = Alpha::parse(mom_alpha);
      Table t{{"alpha", "parity", "k", "direct", "mc", "mc_stderr", "z"}, {}};
      for (Parity parity : detail::parities(mom_parity)) {
        const SeriesKernel kernel({parity, alpha}, mom_truncation);
        const auto mc = moment_monte_carlo(kernel.weights(), mom_max_k, {mom_samples, cfg.seed, cfg.threads});
        for (int k = 1; k <= mom_max_k; ++k) {
          const double direct = moment_direct_weights(kernel.weights(), k);
          const auto& m = mc[k - 1];
          const double z = m.stderr_mean > 0 ? (m.mean - direct) / m.stderr_mean : 0.0;
          t.add({alpha.to_string(), std::string(parity_name(parity)), static_cast<std::int64_t>(k), direct, m.mean,
                 m.stderr_mean, z});
        }
      }
      t.write(body, format);
    } else if (*certify) {
      const Alpha alpha = Alpha::parse(cert_alpha);
      const CertificationReport r = certify_neighborhood(alpha, parse_policy(cert_policy));
      Table t{{"alpha", "delta", "d_minus", "d_plus", "u_minus", "u_plus", "p_neg_minus", "p_neg_plus", "c_lower",
               "certified", "policy", "note"},
              {}};
      t.add({r.alpha, r.delta, r.d_minus, r.d_plus, r.u_minus, r.u_plus, r.p_neg_minus, r.p_neg_plus, r.c_lower,
             r.certified, std::string(policy_name(r.policy)), r.note});
      t.write(body, format, /*single=*/true);
    } else if (*constants) {
      Table t{{"name", "recomputed", "printed", "relation", "consistent"}, {}};
      for (const auto& row : constant_table(const_sigma_cutoff, const_xi_cutoff))
        t.add({row.name, row.recomputed, row.printed, row.relation, row.consistent});
      t.write(body, format);
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedAlphaError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EmptyTableError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }

  const std::string text = body.str();
  out << text;
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kCheckFailed;
    }
    file << text;
  }
  return status;
}

}  // namespace legsum::cli
