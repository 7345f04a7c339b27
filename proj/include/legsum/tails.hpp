#pragma once

// Sub-Gaussian tail bounds and the numeric certificate for alpha near 1/3.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "alpha.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "montecarlo.hpp"
#include "primes.hpp"
#include "sample.hpp"
#include "series.hpp"

namespace legsum {

/// P(eta >= T) <= exp(-T^2 / (2 sigma2)) for eta in the class L(sigma2).
inline double subgaussian_tail(double sigma2, double T) {
  if (!(sigma2 > 0) || !(T > 0)) throw DomainError("subgaussian_tail: sigma2 and T must be positive");
  return std::exp(-T * T / (2 * sigma2));
}

/// P(Y <= 0) <= exp(-ln^2 u / (8 sigma2)) + D/u when Y is within L2 distance
/// sqrt(D) of exp(eta), eta in L(sigma2).
inline double negativity_bound(double sigma2, double D, double u) {
  if (!(u > 0 && u < 1)) throw DomainError("negativity_bound: u must lie in (0,1)");
  if (!(sigma2 > 0)) throw DomainError("negativity_bound: sigma2 must be positive");
  if (D < 0) throw DomainError("negativity_bound: D must be >= 0");
  const double l = std::log(u);
  return std::exp(-l * l / (8 * sigma2)) + D / u;
}

struct UOptimum {
  double u = 0;
  double value = 0;
  bool degenerate = false;  ///< D = 0 (infimum at u -> 0) or D >= 1 (bound >= 1)
};

/// Minimizes negativity_bound over u: grid pre-scan in log u over
/// [1e-6, 1 - 1e-6], then golden-section refinement of the best bracket.
inline UOptimum optimize_u(double sigma2, double D) {
  if (D < 0) throw DomainError("optimize_u: D must be >= 0");
  if (D == 0) return {0, 0, true};
  const double lo = std::log(1e-6), hi = std::log1p(-1e-6);
  auto f = [&](double t) { return negativity_bound(sigma2, D, std::exp(t)); };
  constexpr int kGrid = 400;
  int best = 0;
  double best_val = INFINITY;
  for (int i = 0; i <= kGrid; ++i) {
    const double v = f(lo + (hi - lo) * i / kGrid);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / kGrid;
  double b = lo + (hi - lo) * std::min(kGrid, best + 1) / kGrid;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  const double t = (a + b) / 2;
  return {std::exp(t), f(t), D >= 1};
}

struct Sigma2Bound {
  double partial = 0;     ///< sum_{p<=cutoff, p != 3} (1/4) ln^2((p-1)/(p+1))
  double tail_bound = 0;  ///< bound on the primes above the cutoff
  double total = 0;
};

/// The variance proxy of eta = sum_{p != 3} (1/2) ln((p+1)/(p-1)) X_p.
inline Sigma2Bound sigma2_one_third(std::uint64_t prime_cutoff = 1'000'000) {
  if (prime_cutoff < 100) throw DomainError("sigma2_one_third: cutoff must be >= 100");
  Sigma2Bound s;
  for (std::uint64_t p : sieve_primes(prime_cutoff)) {
    if (p == 3) continue;
    const double l = std::log((static_cast<double>(p) - 1) / (static_cast<double>(p) + 1));
    s.partial += l * l / 4;
  }
  // (1/4) ln^2((n+1)/(n-1)) = artanh^2(1/n) <= (n/(n^2-1))^2 <= 1/(n-1)^2,
  // and sum_{n > c} 1/(n-1)^2 <= 1/(c-1).
  s.tail_bound = 1.0 / (static_cast<double>(prime_cutoff) - 1);
  s.total = s.partial + s.tail_bound;
  return s;
}

/// Both sides of L(a-(1/3)) = A1 exp(eta1) and L(a+(1/3)) = A2 exp(eta2),
/// all truncated at primes <= P.
struct Lemma7Check {
  double lhs_minus = 0, rhs_minus = 0;
  double lhs_plus = 0, rhs_plus = 0;
  double eta_minus = 0, eta_plus = 0;
  double normalizer_minus = 0;  ///< A1(P) = (3/2) prod (1 - p^-2)^{-1/2}, -> pi/sqrt3
  double normalizer_plus = 0;   ///< A2(P) = A1(P)/sqrt3, -> pi/3
  double rel_err_minus = 0, rel_err_plus = 0;
  bool pass = false;
};

inline Lemma7Check lemma7_identity_check(const MultiplicativeSample& sample, std::uint64_t prime_cutoff,
                                         double tolerance = 1e-6) {
  Lemma7Check c;
  double prod_minus = 1.5, prod_plus = std::sqrt(3.0) / 2, log_norm = 0;
  for (std::uint64_t p : sieve_primes(prime_cutoff)) {
    if (p == 3) continue;
    const double pd = static_cast<double>(p);
    const int x = sample.at_prime(p);
    const int chi = legendre(static_cast<std::int64_t>(p % 3), 3);
    prod_minus /= 1 - x / pd;
    prod_plus /= 1 - chi * x / pd;
    const double half_log = 0.5 * std::log((pd + 1) / (pd - 1));
    c.eta_minus += half_log * x;
    c.eta_plus += half_log * chi * x;
    log_norm += -0.5 * std::log1p(-1 / (pd * pd));
  }
  c.normalizer_minus = 1.5 * std::exp(log_norm);
  c.normalizer_plus = c.normalizer_minus / std::sqrt(3.0);
  c.lhs_minus = prod_minus;
  c.lhs_plus = prod_plus;
  c.rhs_minus = c.normalizer_minus * std::exp(c.eta_minus);
  c.rhs_plus = c.normalizer_plus * std::exp(c.eta_plus);
  c.rel_err_minus = std::fabs(c.lhs_minus - c.rhs_minus) / std::fabs(c.rhs_minus);
  c.rel_err_plus = std::fabs(c.lhs_plus - c.rhs_plus) / std::fabs(c.rhs_plus);
  c.pass = c.rel_err_minus <= tolerance && c.rel_err_plus <= tolerance;
  return c;
}

/// Riemann zeta for real s > 1 by Euler-Maclaurin with four Bernoulli corrections.
inline double zeta(double s, std::uint64_t cutoff = 100000) {
  if (!(s > 1)) throw DomainError("zeta: s must exceed 1");
  const double N = static_cast<double>(cutoff);
  long double sum = 0;
  for (std::uint64_t n = cutoff - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  sum += std::pow(N, 1 - s) / (s - 1) + std::pow(N, -s) / 2;
  // B_{2k} / (2k)!
  constexpr std::array<double, 4> kB = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600};
  double rising = s;  // s (s+1) ... (s+2k-2)
  for (int k = 1; k <= 4; ++k) {
    sum += kB[k - 1] * rising * std::pow(N, -s - 2 * k + 1);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
  }
  return static_cast<double>(sum);
}

/// tau(n^2) = prod (2 e_i + 1) over n = prod p_i^{e_i}.
inline std::uint64_t tau_of_square(std::uint64_t n) {
  if (n == 0) throw DomainError("tau_of_square: n must be >= 1");
  std::uint64_t t = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    t *= 2 * e + 1;
  }
  if (n > 1) t *= 3;
  return t;
}

/// Partial sums sum_{n<=N} tau(n^2) / n^s using a smallest-prime-factor sieve.
inline double tau_square_partial_sum(double s, std::uint32_t N) {
  const auto spf = smallest_prime_factors(N);
  long double sum = 1;  // n = 1
  std::vector<std::uint32_t> tau(N + 1, 1);
  for (std::uint32_t n = 2; n <= N; ++n) {
    const std::uint32_t p = spf[n];
    std::uint32_t m = n, e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    tau[n] = tau[m] * (2 * e + 1);
    sum += tau[n] * std::pow(static_cast<long double>(n), -s);
  }
  return static_cast<double>(sum);
}

struct ZetaRatioCheck {
  double zeta_4_3 = 0;
  double zeta_8_3 = 0;
  double ratio = 0;             ///< zeta(4/3)^3 / zeta(8/3) = sum tau(n^2)/n^{4/3}
  double ratio_times_2_43 = 0;  ///< ratio * 2^{4/3}, asserted < 92
  double partial_4_3 = 0;       ///< sum_{n<=N} tau(n^2)/n^{4/3}
  double limit_2 = 0;           ///< zeta(2)^3 / zeta(4)
  double partial_2 = 0;         ///< sum_{n<=N} tau(n^2)/n^2
  std::uint32_t partial_terms = 0;
  bool pass = false;
};

inline ZetaRatioCheck zeta_ratio_check(std::uint32_t partial_terms = 1'000'000) {
  ZetaRatioCheck z;
  z.zeta_4_3 = zeta(4.0 / 3);
  z.zeta_8_3 = zeta(8.0 / 3);
  z.ratio = std::pow(z.zeta_4_3, 3) / z.zeta_8_3;
  z.ratio_times_2_43 = z.ratio * std::pow(2.0, 4.0 / 3);
  z.partial_terms = partial_terms;
  z.partial_4_3 = tau_square_partial_sum(4.0 / 3, partial_terms);
  z.limit_2 = std::pow(zeta(2), 3) / zeta(4);
  z.partial_2 = tau_square_partial_sum(2, partial_terms);
  z.pass = z.ratio_times_2_43 < 92 && z.partial_4_3 < z.ratio;
  return z;
}

/// E(L(f(alpha)) - L(f(beta)))^2 <= 92 |alpha - beta|^{2/3} L^{2/3} C^{4/3}.
inline double distance_bound(double lipschitz, double sup_bound, double delta) {
  if (!(lipschitz > 0) || !(sup_bound > 0)) throw DomainError("distance_bound: L and C must be positive");
  if (delta < 0) throw DomainError("distance_bound: delta must be >= 0");
  return 92 * std::cbrt(delta * delta) * std::cbrt(lipschitz * lipschitz) * std::cbrt(std::pow(sup_bound, 4));
}

/// The constant of the specialized bound E(L(a(alpha)) - L(a(beta)))^2 <= K |alpha - beta|^{2/3}.
inline constexpr double kPrintedDistanceConstant = 313.3;

struct EmpiricalDistance {
  double mc_estimate = 0;
  double mc_stderr = 0;
  double exact_truncated = 0;  ///< sum over n, m <= N with nm square
};

/// Mean squared difference of the truncated series at alpha and beta.
inline EmpiricalDistance empirical_distance(const Alpha& alpha, const Alpha& beta, Parity parity, std::size_t N,
                                            std::uint64_t samples, std::uint64_t seed,
                                            unsigned threads = default_threads()) {
  const SeriesKernel ka({parity, alpha}, N), kb({parity, beta}, N);
  std::vector<double> w(N + 1, 0.0);
  for (std::size_t n = 1; n <= N; ++n) w[n] = ka.weights()[n] - kb.weights()[n];
  EmpiricalDistance d;
  d.exact_truncated = moment_direct_weights(w, 2);
  const auto mc = moment_monte_carlo(w, 2, {samples, seed, threads});
  d.mc_estimate = mc[1].mean;
  d.mc_stderr = mc[1].stderr_mean;
  return d;
}

/// Which constants scale D = K * delta^{2/3} in the certificate.
enum class ConstantPolicy {
  kPrinted,       ///< 94 and 282
  kRecomputed,    ///< (3/pi^2) 313.3 and (9/pi^2) 313.3
  kConservative,  ///< the larger of the two at each step
};

inline const char* policy_name(ConstantPolicy p) {
  switch (p) {
    case ConstantPolicy::kPrinted: return "printed";
    case ConstantPolicy::kRecomputed: return "recomputed";
    default: return "conservative";
  }
}

inline ConstantPolicy parse_policy(const std::string& s) {
  if (s == "printed") return ConstantPolicy::kPrinted;
  if (s == "recomputed") return ConstantPolicy::kRecomputed;
  if (s == "conservative") return ConstantPolicy::kConservative;
  throw DomainError("unknown constant policy '" + s + "'");
}

inline constexpr double kSigma2OneThird = 0.395;
inline constexpr double kCertifiedRadius = 2e-6;
inline constexpr double kPrintedKMinus = 94;
inline constexpr double kPrintedKPlus = 282;

inline double recomputed_k_minus() { return 3 / (std::numbers::pi * std::numbers::pi) * kPrintedDistanceConstant; }
inline double recomputed_k_plus() { return 9 / (std::numbers::pi * std::numbers::pi) * kPrintedDistanceConstant; }

struct CertificationReport {
  double alpha = 0;
  double delta = 0;
  ConstantPolicy policy = ConstantPolicy::kConservative;
  double k_minus = 0, k_plus = 0;
  double d_minus = 0, d_plus = 0;
  double u_minus = 0, u_plus = 0;
  double p_neg_minus = 0, p_neg_plus = 0;
  double c_lower = 0;
  bool certified = false;  ///< delta within the certified radius and c_lower > 1/2
  std::string note;
};

/// Lower bound on the prime density of nonnegative L(alpha, p) for alpha near 1/3.
inline CertificationReport certify_neighborhood(const Alpha& alpha, ConstantPolicy policy = ConstantPolicy::kConservative) {
  CertificationReport r;
  r.alpha = static_cast<double>(alpha.value());
  if (alpha.exact()) {
    const Rational& q = *alpha.exact();
    // |num/den - 1/3| = |3 num - den| / (3 den)
    const __int128 diff = 3 * static_cast<__int128>(q.num) - q.den;
    r.delta = static_cast<double>(static_cast<long double>(diff < 0 ? -diff : diff) / (3.0L * q.den));
  } else {
    r.delta = static_cast<double>(std::fabs(alpha.value() - 1.0L / 3));
  }
  r.policy = policy;
  switch (policy) {
    case ConstantPolicy::kPrinted:
      r.k_minus = kPrintedKMinus;
      r.k_plus = kPrintedKPlus;
      break;
    case ConstantPolicy::kRecomputed:
      r.k_minus = recomputed_k_minus();
      r.k_plus = recomputed_k_plus();
      break;
    case ConstantPolicy::kConservative:
      r.k_minus = std::max(kPrintedKMinus, recomputed_k_minus());
      r.k_plus = std::max(kPrintedKPlus, recomputed_k_plus());
      break;
  }
  const double scale = std::cbrt(r.delta * r.delta);
  r.d_minus = r.k_minus * scale;
  r.d_plus = r.k_plus * scale;
  const UOptimum om = optimize_u(kSigma2OneThird, r.d_minus);
  const UOptimum op = optimize_u(kSigma2OneThird, r.d_plus);
  r.u_minus = om.u;
  r.u_plus = op.u;
  r.p_neg_minus = std::min(1.0, om.value);
  r.p_neg_plus = std::min(1.0, op.value);
  r.c_lower = 1 - (r.p_neg_minus + r.p_neg_plus) / 2;
  if (r.delta == 0) r.note = "degenerate optimum: D = 0, bound attained only as u -> 0";
  else if (om.degenerate || op.degenerate) r.note = "degenerate: D >= 1, negativity bound is trivial";
  r.certified = r.delta <= kCertifiedRadius * (1 + 1e-9) && r.c_lower > 0.5;
  return r;
}

}  // namespace legsum
