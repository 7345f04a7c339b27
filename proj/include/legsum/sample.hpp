#pragma once

// Random completely multiplicative functions n -> X_n with X_p independent
// Rademacher signs at primes.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "philox.hpp"

namespace legsum {

/// One realization of (X_p). X_p is a pure function of (seed, p) through
/// Philox, so values can be drawn lazily and in any order.
class MultiplicativeSample {
 public:
  explicit MultiplicativeSample(std::uint64_t seed) : seed_(seed) {}

  /// Every X_p equal to `sign` (+1 or -1); seed() is 0.
  static MultiplicativeSample constant(int sign) {
    if (sign != 1 && sign != -1) throw DomainError("MultiplicativeSample::constant: sign must be +-1");
    MultiplicativeSample s(0);
    s.constant_ = sign;
    return s;
  }

  /// Copy with X_p forced to `value` (before any lambda twist).
  MultiplicativeSample with_prime(std::uint64_t p, int value) const {
    if (value != 1 && value != -1) throw DomainError("MultiplicativeSample::with_prime: value must be +-1");
    MultiplicativeSample s = *this;
    auto it = std::find_if(s.overrides_.begin(), s.overrides_.end(), [p](const auto& o) { return o.first == p; });
    if (it != s.overrides_.end())
      it->second = value;
    else
      s.overrides_.emplace_back(p, value);
    return s;
  }

  std::uint64_t seed() const { return seed_; }
  bool twisted() const { return twisted_; }

  /// X_p for a prime p.
  int at_prime(std::uint64_t p) const {
    int v;
    auto it = std::find_if(overrides_.begin(), overrides_.end(), [p](const auto& o) { return o.first == p; });
    if (it != overrides_.end())
      v = it->second;
    else if (constant_ != 0)
      v = constant_;
    else
      v = (Philox4x32(seed_).bits64(p) & 1) ? 1 : -1;
    return twisted_ ? -v : v;
  }

  /// X_n = prod X_p^{v_p(n)} for n >= 1, by trial division.
  int at(std::uint64_t n) const {
    if (n == 0) throw DomainError("MultiplicativeSample::at: n must be >= 1");
    int v = 1;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e & 1) v *= at_prime(p);
    }
    if (n > 1) v *= at_prime(n);
    return v;
  }

  friend MultiplicativeSample lambda_twist(const MultiplicativeSample& s) {
    MultiplicativeSample t = s;
    t.twisted_ = !t.twisted_;
    return t;
  }

  friend bool operator==(const MultiplicativeSample& a, const MultiplicativeSample& b) {
    auto sorted = [](std::vector<std::pair<std::uint64_t, int>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    return a.seed_ == b.seed_ && a.constant_ == b.constant_ && a.twisted_ == b.twisted_ &&
           sorted(a.overrides_) == sorted(b.overrides_);
  }

 private:
  std::uint64_t seed_;
  int constant_ = 0;
  bool twisted_ = false;
  std::vector<std::pair<std::uint64_t, int>> overrides_;
};

/// Flips every X_p, i.e. X_n -> lambda(n) X_n. An involution.
MultiplicativeSample lambda_twist(const MultiplicativeSample& s);

/// Seed of the index-th Monte Carlo sample drawn from a base seed.
inline std::uint64_t sample_seed(std::uint64_t base_seed, std::uint64_t index) {
  return Philox4x32(base_seed).bits64(index, 0x5eed);
}

/// Fills x[n] = X_n for 0 < n < x.size() (x[0] = 0) using a smallest-prime-factor table
/// covering the same range.
inline void realize(const MultiplicativeSample& sample, std::span<const std::uint32_t> spf, std::span<std::int8_t> x) {
  if (x.empty()) return;
  x[0] = 0;
  if (x.size() > 1) x[1] = 1;
  for (std::size_t n = 2; n < x.size(); ++n) {
    const std::uint32_t p = spf[n];
    x[n] = p == n ? static_cast<std::int8_t>(sample.at_prime(p)) : static_cast<std::int8_t>(x[p] * x[n / p]);
  }
}

}  // namespace legsum
