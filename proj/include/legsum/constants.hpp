#pragma once

// Side-by-side table of every certificate and model constant: the value
// recomputed here versus the value quoted in the literature.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "montecarlo.hpp"
#include "tails.hpp"

namespace legsum {

struct ConstantRow {
  std::string name;
  double recomputed = 0;
  double printed = 0;
  std::string relation;  ///< "<", "<=", "~" (agrees to the printed digits) or "=" (identity)
  bool consistent = false;
};

namespace detail {

inline ConstantRow relate(std::string name, double recomputed, double printed, std::string relation,
                          double approx_tol = 0) {
  bool ok = false;
  if (relation == "<") ok = recomputed < printed;
  else if (relation == "<=") ok = recomputed <= printed;
  else ok = std::fabs(recomputed - printed) <= approx_tol;
  return {std::move(name), recomputed, printed, std::move(relation), ok};
}

}  // namespace detail

/// sigma2 and xi sums use the given prime cutoffs.
inline std::vector<ConstantRow> constant_table(std::uint64_t sigma_cutoff = 1'000'000,
                                               std::uint64_t xi_cutoff = 10'000'000) {
  using detail::relate;
  const double pi = std::numbers::pi;
  const double pi2 = pi * pi;
  std::vector<ConstantRow> rows;

  const Sigma2Bound s2 = sigma2_one_third(sigma_cutoff);
  rows.push_back(relate("sigma2_one_third_total", s2.total, kSigma2OneThird, "<"));
  rows.push_back(relate("eight_sigma2", 8 * kSigma2OneThird, 3.16, "~", 1e-12));
  const MultiplicativeSample zero_exponent = MultiplicativeSample::constant(1);
  const Lemma7Check l7 = lemma7_identity_check(zero_exponent, sigma_cutoff);
  rows.push_back(relate("A1_pi_over_sqrt3", l7.normalizer_minus, 1.8138, "~", 5e-5));
  rows.push_back(relate("A2_pi_over_3", l7.normalizer_plus, 1.0472, "~", 5e-5));

  const ZetaRatioCheck z = zeta_ratio_check(100000);
  rows.push_back(relate("zeta43_cubed_over_zeta83_times_2_43", z.ratio_times_2_43, 92, "<"));
  const double k_fund = distance_bound(2 * pi, 1, 1);
  rows.push_back(relate("distance_constant_92_2pi_23", k_fund, kPrintedDistanceConstant, "~", 0.05));
  rows.push_back(relate("three_times_313_3", 3 * kPrintedDistanceConstant, 926.9, "~", 0.05));
  rows.push_back(relate("nine_times_313_3", 9 * kPrintedDistanceConstant, 2780.7, "~", 0.05));
  rows.push_back(relate("k_minus", recomputed_k_minus(), kPrintedKMinus, "<="));
  rows.push_back(relate("k_plus", recomputed_k_plus(), kPrintedKPlus, "<="));

  const double scale = std::cbrt(kCertifiedRadius * kCertifiedRadius);
  rows.push_back(relate("d_minus_at_2e-6", kPrintedKMinus * scale, 0.015, "<="));
  rows.push_back(relate("d_plus_at_2e-6", kPrintedKPlus * scale, 0.0447, "<="));
  const UOptimum um = optimize_u(kSigma2OneThird, 0.015);
  const UOptimum up = optimize_u(kSigma2OneThird, 0.0447);
  rows.push_back(relate("u_minus", um.u, 0.0756, "~", 1e-3));
  rows.push_back(relate("u_plus", up.u, 0.12957, "~", 1e-3));
  rows.push_back(relate("p_neg_minus", um.value, 0.32, "<="));
  rows.push_back(relate("p_neg_plus", up.value, 0.612, "<="));
  const CertificationReport printed = certify_neighborhood(Alpha::real(1.0L / 3 + 2e-6L), ConstantPolicy::kPrinted);
  const CertificationReport recomputed = certify_neighborhood(Alpha::real(1.0L / 3 + 2e-6L), ConstantPolicy::kRecomputed);
  auto ge = [](std::string name, double v, double bound) { return ConstantRow{std::move(name), v, bound, ">=", v >= bound}; };
  rows.push_back(ge("c_lower_printed_constants", printed.c_lower, 0.534));
  rows.push_back(ge("c_lower_recomputed_constants", recomputed.c_lower, 0.534));

  const XiStatistics xi = xi_statistics(xi_cutoff);
  rows.push_back(relate("xi_variance", xi.variance, 0.35355, "~", 1e-4));
  rows.push_back(relate("xi_phi", xi.phi, 0.553, "~", 1e-3));
  rows.push_back(relate("xi_gap_squared", std::pow(pi / 2 - xi.phi, 2), 1.077, "~", 5e-4));
  rows.push_back(relate("xi_chebyshev_bound", xi.chebyshev_bound, 1.0 / 3, "<"));

  rows.push_back(relate("cond_mean_1_8", (std::sqrt(2.0) - 1) / 2 * pi2 / 8, (std::sqrt(2.0) - 1) * pi2 / 18, "~", 1e-6));
  rows.push_back(relate("twist_h_limit", pi2 / 6 * (1 - 1.0 / 25), 4 * pi2 / 25, "~", 1e-12));
  rows.push_back(relate("twist_f_limit", pi2 / 6 * (1 - 1.0 / 4), pi2 / 9, "~", 1e-6));
  return rows;
}

}  // namespace legsum
