#pragma once

// Monte Carlo over independent samples of the random multiplicative function.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <vector>

#include "decomposition.hpp"
#include "parallel.hpp"
#include "primes.hpp"
#include "sample.hpp"
#include "series.hpp"

namespace legsum {

/// Wilson score interval for a binomial proportion at 95% confidence.
struct Interval {
  double low = 0;
  double high = 1;
  double half_width() const { return (high - low) / 2; }
};

inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0, 1};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / n;
  const double denom = 1 + z * z / n;
  const double center = (ph + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

/// Positivity counts and moments of one model series over Monte Carlo samples.
struct PositivityEstimate {
  std::uint64_t samples = 0;
  std::uint64_t strict_pos = 0;  ///< value > 0
  std::uint64_t nonneg = 0;      ///< value >= -tolerance
  double tolerance = 0;
  double mean = 0;
  double stderr_mean = 0;
  double min_value = 0;

  double frac_strict() const { return samples ? static_cast<double>(strict_pos) / samples : 0; }
  double frac_nonneg() const { return samples ? static_cast<double>(nonneg) / samples : 0; }
  Interval ci_strict() const { return wilson_interval(strict_pos, samples); }
  Interval ci_nonneg() const { return wilson_interval(nonneg, samples); }
};

/// A model value for a sample: Euler product or truncated series.
using SampleEvaluator = std::function<double(const MultiplicativeSample&)>;

struct MonteCarloConfig {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = default_threads();
};

/// Applies `make_sample` to each sample index and `eval` to the sample; aggregates
/// counts and moments in fixed-size chunks so results do not depend on threads.
inline PositivityEstimate estimate_positivity(const SampleEvaluator& eval, const MonteCarloConfig& cfg,
                                              double tolerance,
                                              const std::function<MultiplicativeSample(std::uint64_t)>& make_sample = {}) {
  struct Acc {
    std::uint64_t strict = 0, nonneg = 0;
    double sum = 0, sum2 = 0, min = INFINITY;
  };
  auto chunks = map_chunks<Acc>(cfg.samples, 256, cfg.threads, [&](std::size_t begin, std::size_t end) {
    Acc a;
    for (std::size_t i = begin; i < end; ++i) {
      const MultiplicativeSample s = make_sample ? make_sample(i) : MultiplicativeSample(sample_seed(cfg.seed, i));
      const double v = eval(s);
      a.strict += v > 0;
      a.nonneg += v >= -tolerance;
      a.sum += v;
      a.sum2 += v * v;
      a.min = std::min(a.min, v);
    }
    return a;
  });
  Acc total;
  for (const Acc& a : chunks) {
    total.strict += a.strict;
    total.nonneg += a.nonneg;
    total.sum += a.sum;
    total.sum2 += a.sum2;
    total.min = std::min(total.min, a.min);
  }
  PositivityEstimate e;
  e.samples = cfg.samples;
  e.strict_pos = total.strict;
  e.nonneg = total.nonneg;
  e.tolerance = tolerance;
  if (cfg.samples > 0) {
    const double n = static_cast<double>(cfg.samples);
    e.mean = total.sum / n;
    const double var = cfg.samples > 1 ? std::max(0.0, (total.sum2 - n * e.mean * e.mean) / (n - 1)) : 0.0;
    e.stderr_mean = std::sqrt(var / n);
    e.min_value = total.min;
  }
  return e;
}

/// Tolerance for "nonnegative up to rounding" at a given coefficient scale.
inline double positivity_tolerance(double scale) { return 1e-9 * std::max(1.0, scale); }

/// Evaluator for the truncated series sum_{n<=N} a_n X_n / n.
inline SampleEvaluator series_evaluator(const CoefficientSpec& spec, std::size_t N) {
  auto kernel = std::make_shared<SeriesKernel>(spec, N);
  auto spf = std::make_shared<std::vector<std::uint32_t>>(smallest_prime_factors(static_cast<std::uint32_t>(N)));
  return [kernel, spf, N](const MultiplicativeSample& s) {
    thread_local std::vector<std::int8_t> x;
    x.resize(N + 1);
    realize(s, *spf, x);
    return kernel->evaluate(x);
  };
}

inline SampleEvaluator euler_evaluator(const RationalDecomposition& decomp, std::uint64_t prime_cutoff) {
  auto kernel = std::make_shared<EulerKernel>(decomp, prime_cutoff);
  return [kernel](const MultiplicativeSample& s) { return (*kernel)(s); };
}

/// Estimates for both parities and the combined lower bound (c+ + c-)/2 on the
/// prime density of nonnegative L(alpha, p).
struct CombinedEstimate {
  PositivityEstimate plus;
  PositivityEstimate minus;
  double c_strict() const { return (plus.frac_strict() + minus.frac_strict()) / 2; }
  double c_nonneg() const { return (plus.frac_nonneg() + minus.frac_nonneg()) / 2; }
};

/// The alpha = 1/8 conditional mean E(L(a+) | X_2 = -1).
struct ConditionalMean18 {
  double printed_constant = 0;  ///< (sqrt2 - 1) pi^2 / 18
  double derived_constant = 0;  ///< (sqrt2 - 1)/2 * sum_{odd n} 1/n^2 = (sqrt2 - 1) pi^2 / 16
  double truncated_expectation = 0;  ///< exact E of the truncated series given X_2 = -1
  double mc_mean = 0;
  double mc_stderr = 0;
  double mc_mean_x2_plus = 0;  ///< same with X_2 forced to +1
  double mc_stderr_x2_plus = 0;
  double truncated_expectation_x2_plus = 0;
};

namespace detail {

// E[X_n | X_2 = x2] = x2^{v_2(n)} when the odd part of n is a square, else 0.
inline double conditional_x_expectation(std::uint64_t n, int x2) {
  int v2 = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v2;
  }
  const std::uint64_t r = isqrt(n);
  if (r * r != n) return 0;
  return (v2 & 1) && x2 < 0 ? -1.0 : 1.0;
}

}  // namespace detail

inline ConditionalMean18 conditional_mean_1_8(std::uint64_t samples = 100000, std::size_t N = 10000,
                                              std::uint64_t seed = 0, unsigned threads = default_threads()) {
  ConditionalMean18 r;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  r.printed_constant = (std::sqrt(2.0) - 1) * pi2 / 18;
  r.derived_constant = (std::sqrt(2.0) - 1) / 2 * pi2 / 8;
  const CoefficientSpec spec{Parity::kPlus, Alpha::rational(1, 8)};
  for (std::size_t n = 1; n <= N; ++n) {
    const double w = spec(n) / static_cast<double>(n);
    r.truncated_expectation += w * detail::conditional_x_expectation(n, -1);
    r.truncated_expectation_x2_plus += w * detail::conditional_x_expectation(n, +1);
  }
  const SampleEvaluator eval = series_evaluator(spec, N);
  const MonteCarloConfig cfg{samples, seed, threads};
  for (int x2 : {-1, 1}) {
    const auto e = estimate_positivity(eval, cfg, 0.0, [&](std::uint64_t i) {
      return MultiplicativeSample(sample_seed(seed, i)).with_prime(2, x2);
    });
    (x2 < 0 ? r.mc_mean : r.mc_mean_x2_plus) = e.mean;
    (x2 < 0 ? r.mc_stderr : r.mc_stderr_x2_plus) = e.stderr_mean;
  }
  return r;
}

struct TwistProduct {
  double value = 0;     ///< E(sample) * E(lambda_twist(sample))
  double expected = 0;  ///< the same product with X_p set to 0: prod (1 - chi(p)^2/p^2)^{-1}
  double limit = 0;     ///< P -> infinity limit
};

/// H * H~ for H = prod_{p<=P, p != 5} (1 - X_p/p)^{-1}; the limit is 4 pi^2 / 25.
inline TwistProduct twist_product_h(const MultiplicativeSample& s, std::uint64_t prime_cutoff) {
  const Character chi = characters::principal(5);
  TwistProduct t;
  t.value = (euler_product(chi, s, prime_cutoff) * euler_product(chi, lambda_twist(s), prime_cutoff)).real();
  t.expected = 1;
  for (std::uint64_t p : sieve_primes(prime_cutoff))
    if (p != 5) t.expected /= 1 - 1.0 / (static_cast<double>(p) * p);
  t.limit = 4 * std::numbers::pi * std::numbers::pi / 25;
  return t;
}

/// F * F~ for F = prod_{2<p<=P} (1 - X_p/p)^{-1}; the limit is pi^2 / 8.
inline TwistProduct twist_product_f(const MultiplicativeSample& s, std::uint64_t prime_cutoff) {
  const Character chi = characters::principal(2);
  TwistProduct t;
  t.value = (euler_product(chi, s, prime_cutoff) * euler_product(chi, lambda_twist(s), prime_cutoff)).real();
  t.expected = 1;
  for (std::uint64_t p : sieve_primes(prime_cutoff))
    if (p != 2) t.expected /= 1 - 1.0 / (static_cast<double>(p) * p);
  t.limit = std::numbers::pi * std::numbers::pi / 8;
  return t;
}

/// Argument statistics for the alpha = 1/5 sine series.
struct XiStatistics {
  double variance = 0;           ///< sum_{p = +-2 mod 5, p <= cutoff} arctan^2(1/p)
  double variance_tail = 0;      ///< bound on the omitted primes: sum_{n > cutoff} 1/n^2 <= 1/cutoff
  double phi = 0;                ///< arctan(B/A)
  double chebyshev_bound = 0;    ///< (variance + tail) / (pi/2 - phi)^2
};

inline XiStatistics xi_statistics(std::uint64_t prime_cutoff = 10'000'000) {
  XiStatistics x;
  for (std::uint64_t p : sieve_primes(prime_cutoff)) {
    if (p % 5 == 2 || p % 5 == 3) {
      const double a = std::atan(1.0 / static_cast<double>(p));
      x.variance += a * a;
    }
  }
  // arctan(1/n) <= 1/n
  x.variance_tail = 1.0 / static_cast<double>(prime_cutoff);
  const double A = std::sqrt((5 + std::sqrt(5.0)) / 8);
  const double B = std::sqrt((5 - std::sqrt(5.0)) / 8);
  x.phi = std::atan(B / A);
  const double gap = std::numbers::pi / 2 - x.phi;
  x.chebyshev_bound = (x.variance + x.variance_tail) / (gap * gap);
  return x;
}

}  // namespace legsum
