#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "alpha.hpp"

namespace legsum {

/// (cos 2*pi*x, sin 2*pi*x) for x = alpha*n, reduced mod 1 before evaluation.
/// Rational alpha hitting a multiple of 1/4 yields exact 0/+-1 values, so
/// e.g. sin(pi*n) is exactly zero.
inline std::pair<double, double> cos_sin_turns(const Alpha& alpha, std::int64_t n) {
  long double t;
  if (const auto frac = alpha.frac_times_exact(static_cast<std::uint64_t>(n < 0 ? -n : n))) {
    auto [r, den] = *frac;
    if (n < 0 && r != 0) r = den - r;
    if ((4 * static_cast<__int128>(r)) % den == 0) {
      switch (static_cast<int>(4 * static_cast<__int128>(r) / den)) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    t = static_cast<long double>(r) / static_cast<long double>(den);
  } else {
    const long double x = alpha.value() * static_cast<long double>(n);
    t = x - std::floor(x);
  }
  const long double angle = 2 * std::numbers::pi_v<long double> * t;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace legsum
