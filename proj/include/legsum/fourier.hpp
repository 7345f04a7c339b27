#pragma once

// Fourier expansion of L(alpha, p) through the quadratic Gauss sum.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "alpha.hpp"
#include "charsum.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "trig.hpp"

namespace legsum {

/// m-th Fourier coefficient of the indicator of [0, alpha] on R/Z:
/// alpha for m = 0, (1 - e^{-2 pi i alpha m}) / (2 pi i m) otherwise.
inline std::complex<double> fourier_coeff(const Alpha& alpha, std::int64_t m) {
  if (m == 0) return {static_cast<double>(alpha.value()), 0.0};
  const auto [c, s] = cos_sin_turns(alpha, m);
  const double denom = 2 * std::numbers::pi * static_cast<double>(m);
  return {s / denom, -(1 - c) / denom};
}

/// tau = sum_{n=1}^{p-1} (n/p) e^{2 pi i n/p}, summed directly.
inline std::complex<double> gauss_sum(std::uint64_t p) {
  const QRTable table = build_qr_table(p);
  long double re = 0, im = 0;
  for (std::uint64_t n = 1; n < p; ++n) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(n) / p;
    const int chi = table.symbol(n);
    re += chi * std::cos(angle);
    im += chi * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

/// sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
inline std::complex<double> gauss_sum_closed_form(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw DomainError("gauss_sum_closed_form: " + std::to_string(p) + " is not an odd prime");
  const double r = std::sqrt(static_cast<double>(p));
  return p % 4 == 1 ? std::complex<double>{r, 0} : std::complex<double>{0, r};
}

struct FourierPartial {
  double value = 0;  ///< real part of the truncated series
  double imag = 0;   ///< imaginary part, zero up to rounding
};

/// tau * sum_{0<|m|<=M} F(m) (m/p), with the m and -m terms paired analytically:
/// F(m) + F(-m) = sin(2 pi m alpha)/(pi m) and F(m) - F(-m) = -i (1 - cos(2 pi m alpha))/(pi m).
inline FourierPartial fourier_partial(const Alpha& alpha, std::uint64_t p, std::uint64_t M) {
  if (M == 0) throw DomainError("fourier_partial: M must be >= 1");
  if (alpha.times_is_integer(p))
    throw BoundaryCase("fourier_partial: alpha*p is an integer for alpha=" + alpha.to_string() + ", p=" + std::to_string(p));
  const QRTable table = build_qr_table(p);
  const bool even_character = p % 4 == 1;  // (-1/p) = +1
  long double sum = 0;
  for (std::uint64_t m = 1; m <= M; ++m) {
    const int chi = table.symbol(m);
    if (chi == 0) continue;
    const auto [c, s] = cos_sin_turns(alpha, static_cast<std::int64_t>(m));
    const long double paired = even_character ? s : (1 - c);
    sum += chi * paired / static_cast<long double>(m);
  }
  sum /= std::numbers::pi_v<long double>;
  // even: tau * sum; odd: tau * (-i) * sum
  const std::complex<double> tau = gauss_sum(p);
  const std::complex<double> series = even_character ? std::complex<double>(static_cast<double>(sum), 0)
                                                     : std::complex<double>(0, -static_cast<double>(sum));
  const std::complex<double> total = tau * series;
  return {total.real(), total.imag()};
}

struct TwistedSumProbe {
  double max_abs = 0;  ///< max_{N' <= N} |sum_{n<=N'} e^{2 pi i alpha n} (n/p)|
  double ratio = 0;    ///< max_abs / (sqrt(p) ln p)
};

inline TwistedSumProbe twisted_sum_check(const Alpha& alpha, std::uint64_t p, std::uint64_t N) {
  const QRTable table = build_qr_table(p);
  std::complex<long double> acc = 0;
  long double best = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const int chi = table.symbol(n);
    if (chi != 0) {
      const auto [c, s] = cos_sin_turns(alpha, static_cast<std::int64_t>(n));
      acc += std::complex<long double>(chi * c, chi * s);
    }
    best = std::max(best, std::abs(acc));
  }
  const double scale = std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p));
  return {static_cast<double>(best), static_cast<double>(best) / scale};
}

}  // namespace legsum
