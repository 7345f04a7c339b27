#pragma once

// Moments E[S^k] of S = sum_{n<=N} w_n X_n.
//
// Since X_n depends only on the squarefree kernel q(n), S = sum_q Y_q X_q with
// Y_q = sum_{q(n)=q} w_n, and E[X_{q1}...X_{qk}] = 1 exactly when the symmetric
// difference of the prime sets of q1..qk is empty. This is the moment formula
// E L(a)^k = sum_n tau_k(n^2; a) / n^2 regrouped by kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "montecarlo.hpp"
#include "primes.hpp"
#include "series.hpp"

namespace legsum {

namespace detail {

struct KernelWeights {
  std::vector<double> y;             // y[q] for q <= N
  std::vector<std::uint64_t> kernels;  // q with y[q] != 0
};

inline KernelWeights kernel_weights(std::span<const double> w) {
  const std::size_t N = w.size() - 1;
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(N));
  KernelWeights kw;
  kw.y.assign(N + 1, 0.0);
  std::vector<std::uint32_t> kernel(N + 1, 1);
  for (std::size_t n = 2; n <= N; ++n) {
    const std::uint32_t p = spf[n];
    const std::size_t m = n / p;
    kernel[n] = kernel[m] % p == 0 ? kernel[m] / p : kernel[m] * p;
  }
  for (std::size_t n = 1; n <= N; ++n) kw.y[kernel[n]] += w[n];
  for (std::size_t q = 1; q <= N; ++q)
    if (kw.y[q] != 0) kw.kernels.push_back(q);
  return kw;
}

// Symmetric difference of two squarefree numbers' prime sets.
inline std::uint64_t sym_diff64(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  return (a / g) * (b / g);
}

inline unsigned __int128 sym_diff(unsigned __int128 a, std::uint64_t b) {
  if (a <= UINT32_MAX && b <= UINT32_MAX) return sym_diff64(static_cast<std::uint64_t>(a), b);
  const unsigned __int128 g = [&] {
    unsigned __int128 x = a, y = b;
    while (y != 0) {
      const unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  }();
  return (a / g) * (b / g);
}

}  // namespace detail

/// Default work budget (pair or tuple visits) before moment_direct gives up.
inline constexpr double kMomentWorkBudget = 4e9;

/// E[(sum_{n<=N} w[n] X_n)^k] computed exactly; w[0] is ignored.
inline double moment_direct_weights(std::span<const double> w, int k, double work_budget = kMomentWorkBudget) {
  if (w.size() < 2) throw DomainError("moment_direct: need at least one weight");
  if (k < 0) throw DomainError("moment_direct: k must be >= 0");
  if (k > 6) throw ResourceError("moment_direct: order " + std::to_string(k) + " exceeds the supported maximum 6");
  if (k == 0) return 1;
  const detail::KernelWeights kw = detail::kernel_weights(w);
  const std::size_t N = w.size() - 1;
  const auto K = static_cast<double>(kw.kernels.size());
  const auto& y = kw.y;
  const auto& ks = kw.kernels;

  if (k == 1) return y[1];
  if (k == 2) {
    double s = 0;
    for (std::uint64_t q : ks) s += y[q] * y[q];
    return s;
  }
  if (k == 4) {
    // E S^4 = sum_r C(r)^2 with C = Y (*) Y; C is built in hash buckets to bound memory.
    if (K * K / 2 * 4 > work_budget) throw ResourceError("moment_direct: k=4 work exceeds budget");
    constexpr unsigned kBuckets = 4;
    double total = 0;
    std::vector<std::pair<std::uint64_t, double>> entries;
    for (unsigned b = 0; b < kBuckets; ++b) {
      entries.clear();
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (b == 0) entries.emplace_back(1, y[ks[i]] * y[ks[i]]);
        for (std::size_t j = i + 1; j < ks.size(); ++j) {
          const auto r = detail::sym_diff64(ks[i], ks[j]);
          if ((r * 0x9E3779B97F4A7C15ull) >> 62 != b) continue;
          entries.emplace_back(r, 2 * y[ks[i]] * y[ks[j]]);
        }
      }
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      for (std::size_t i = 0; i < entries.size();) {
        double c = 0;
        std::size_t j = i;
        for (; j < entries.size() && entries[j].first == entries[i].first; ++j) c += entries[j].second;
        total += c * c;
        i = j;
      }
    }
    return total;
  }
  // General k: enumerate (k-1)-tuples, the last factor is forced to be the
  // symmetric difference of the others.
  if (std::pow(K, k - 1) > work_budget)
    throw ResourceError("moment_direct: order " + std::to_string(k) + " over " + std::to_string(ks.size()) +
                        " kernels exceeds the work budget");
  double total = 0;
  auto recurse = [&](auto&& self, int depth, unsigned __int128 r, double weight) -> void {
    if (depth == k - 1) {
      if (r <= N) total += weight * y[static_cast<std::size_t>(r)];
      return;
    }
    for (std::uint64_t q : ks) self(self, depth + 1, detail::sym_diff(r, q), weight * y[q]);
  };
  recurse(recurse, 0, 1, 1.0);
  return total;
}

/// E[L_N(a)^k] for the truncated series with coefficients from `spec`.
inline double moment_direct(const CoefficientSpec& spec, std::size_t N, int k, double work_budget = kMomentWorkBudget) {
  return moment_direct_weights(SeriesKernel(spec, N).weights(), k, work_budget);
}

struct MomentEstimate {
  int k = 0;
  double mean = 0;
  double stderr_mean = 0;
};

/// Monte Carlo E[S^k], k = 1..max_k, for S the truncated series with weights w.
inline std::vector<MomentEstimate> moment_monte_carlo(std::span<const double> w, int max_k, const MonteCarloConfig& cfg) {
  const std::size_t N = w.size() - 1;
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(N));
  const SeriesKernel kernel(std::vector<double>(w.begin(), w.end()));
  struct Acc {
    std::vector<double> sum, sum2;
  };
  auto chunks = map_chunks<Acc>(cfg.samples, 256, cfg.threads, [&](std::size_t begin, std::size_t end) {
    Acc a{std::vector<double>(max_k + 1, 0.0), std::vector<double>(max_k + 1, 0.0)};
    std::vector<std::int8_t> x(N + 1);
    for (std::size_t i = begin; i < end; ++i) {
      realize(MultiplicativeSample(sample_seed(cfg.seed, i)), spf, x);
      const double s = kernel.evaluate(x);
      double pw = 1;
      for (int k = 1; k <= max_k; ++k) {
        pw *= s;
        a.sum[k] += pw;
        a.sum2[k] += pw * pw;
      }
    }
    return a;
  });
  std::vector<MomentEstimate> out;
  const double n = static_cast<double>(cfg.samples);
  for (int k = 1; k <= max_k; ++k) {
    double s = 0, s2 = 0;
    for (const Acc& a : chunks) {
      s += a.sum[k];
      s2 += a.sum2[k];
    }
    const double mean = s / n;
    const double var = cfg.samples > 1 ? std::max(0.0, (s2 - n * mean * mean) / (n - 1)) : 0.0;
    out.push_back({k, mean, std::sqrt(var / n)});
  }
  return out;
}

}  // namespace legsum
