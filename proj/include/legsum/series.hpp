#pragma once

// Coefficient families a+_n = sin 2 pi n alpha, a-_n = 1 - cos 2 pi n alpha
// and the truncated model series L(a) = sum_{n<=N} a_n X_n / n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alpha.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "sample.hpp"
#include "trig.hpp"

namespace legsum {

enum class Parity { kPlus, kMinus };

inline const char* parity_name(Parity p) { return p == Parity::kPlus ? "plus" : "minus"; }

inline Parity parse_parity(const std::string& s) {
  if (s == "plus" || s == "+") return Parity::kPlus;
  if (s == "minus" || s == "-") return Parity::kMinus;
  throw DomainError("unknown parity '" + s + "'");
}

struct CoefficientSpec {
  Parity parity;
  Alpha alpha;

  double operator()(std::uint64_t n) const {
    const auto [c, s] = cos_sin_turns(alpha, static_cast<std::int64_t>(n));
    return parity == Parity::kPlus ? s : 1 - c;
  }
};

/// Precomputed weights w[n] = a_n / n for 1 <= n <= N (w[0] = 0).
class SeriesKernel {
 public:
  SeriesKernel(const CoefficientSpec& spec, std::size_t N) : weights_(N + 1, 0.0) {
    if (N == 0) throw DomainError("SeriesKernel: truncation must be >= 1");
    for (std::size_t n = 1; n <= N; ++n) weights_[n] = spec(n) / static_cast<double>(n);
  }
  explicit SeriesKernel(std::vector<double> weights) : weights_(std::move(weights)) {}

  std::size_t truncation() const { return weights_.size() - 1; }
  std::span<const double> weights() const { return weights_; }

  /// sum w[n] x[n] with x from realize() over at least the same range.
  double evaluate(std::span<const std::int8_t> x) const {
    double s = 0;
    for (std::size_t n = 1; n < weights_.size(); ++n) s += weights_[n] * x[n];
    return s;
  }

 private:
  std::vector<double> weights_;
};

/// sum_{n<=N} a_n X_n / n for one sample.
inline double series_eval(const CoefficientSpec& spec, const MultiplicativeSample& sample, std::size_t N) {
  const SeriesKernel kernel(spec, N);
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(N));
  std::vector<std::int8_t> x(N + 1);
  realize(sample, spf, x);
  return kernel.evaluate(x);
}

}  // namespace legsum
