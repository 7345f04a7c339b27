#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <legsum/charsum.hpp>
#include <legsum/fourier.hpp>
#include <legsum/trig.hpp>

#include "oracles.hpp"

using namespace legsum;
using cd = std::complex<double>;

TEST(FourierCoeff, Examples) {
  EXPECT_EQ(fourier_coeff(Alpha::rational(2, 7), 0), cd(2.0 / 7, 0));
  EXPECT_NEAR(std::abs(fourier_coeff(Alpha::rational(1, 2), 2)), 0.0, 1e-15);
  const cd want = cd(1, -1) / (2 * std::numbers::pi);
  EXPECT_NEAR(std::abs(fourier_coeff(Alpha::rational(1, 4), 1) - want), 0.0, 1e-15);
}

TEST(FourierCoeff, MatchesComplexFormula) {
  const double pi = std::numbers::pi;
  for (double a : {0.1, 0.37, 0.5, 0.9}) {
    for (int m : {-7, -1, 1, 3, 50}) {
      const cd i(0, 1);
      const cd want = (1.0 - std::exp(-2 * pi * i * a * static_cast<double>(m))) / (2 * pi * i * static_cast<double>(m));
      EXPECT_NEAR(std::abs(fourier_coeff(Alpha::real(a), m) - want), 0.0, 1e-13);
    }
  }
}

TEST(FourierCoeff, Parseval) {
  for (double a : {0.2, 0.4, 0.75}) {
    const Alpha alpha = Alpha::real(a);
    const std::int64_t M = 20000;
    double s = std::norm(fourier_coeff(alpha, 0));
    for (std::int64_t m = 1; m <= M; ++m) s += std::norm(fourier_coeff(alpha, m)) + std::norm(fourier_coeff(alpha, -m));
    EXPECT_NEAR(s, a, 1.0 / M);
  }
}

TEST(Trig, ExactQuarterTurns) {
  auto [c, s] = cos_sin_turns(Alpha::rational(1, 4), 1);
  EXPECT_EQ(c, 0.0);
  EXPECT_EQ(s, 1.0);
  std::tie(c, s) = cos_sin_turns(Alpha::rational(1, 2), 3);
  EXPECT_EQ(c, -1.0);
  EXPECT_EQ(s, 0.0);
  std::tie(c, s) = cos_sin_turns(Alpha::rational(1, 3), 1);
  EXPECT_NEAR(c, -0.5, 1e-15);
  EXPECT_NEAR(s, std::sqrt(3.0) / 2, 1e-15);
}

TEST(GaussSum, SmallPrimes) {
  EXPECT_NEAR(std::abs(gauss_sum(5) - cd(std::sqrt(5.0), 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(gauss_sum(7) - cd(0, std::sqrt(7.0))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(gauss_sum(3) - cd(0, std::sqrt(3.0))), 0.0, 1e-12);
  EXPECT_THROW(gauss_sum(9), DomainError);
}

TEST(GaussSum, NormIsP) {
  for (std::uint64_t p : oracle::primes_up_to(499)) {
    if (p == 2) continue;
    const cd g = gauss_sum(p);
    EXPECT_NEAR(std::norm(g) / static_cast<double>(p), 1.0, 1e-9) << p;
    EXPECT_LE(std::abs(g - gauss_sum_closed_form(p)), 1e-9 * std::sqrt(static_cast<double>(p))) << p;
  }
}

TEST(FourierPartial, Examples) {
  const auto f = fourier_partial(Alpha::rational(1, 3), 7, 100000);
  EXPECT_NEAR(f.value, 2.0, 0.01);
  for (std::uint64_t M : {1ull, 10ull, 1000ull}) EXPECT_NEAR(fourier_partial(Alpha::rational(1, 2), 13, M).value, 0.0, 1e-12);
  const std::int64_t exact = legendre_sum(Alpha::rational(2, 5), 19);
  const double e4 = std::fabs(fourier_partial(Alpha::rational(2, 5), 19, 10000).value - exact);
  const double e5 = std::fabs(fourier_partial(Alpha::rational(2, 5), 19, 100000).value - exact);
  EXPECT_LE(e4, 0.05);
  EXPECT_LE(e5, 0.05);
  EXPECT_LT(e5, e4);
}

TEST(FourierPartial, ImaginaryPartVanishes) {
  for (std::uint64_t p : {11ull, 13ull, 101ull, 103ull}) {
    const auto f = fourier_partial(Alpha::rational(2, 7), p, 100000);
    EXPECT_LT(std::fabs(f.imag), 1e-6 * std::max(1.0, std::fabs(f.value)));
  }
}

TEST(FourierPartial, BoundaryCase) {
  EXPECT_THROW(fourier_partial(Alpha::rational(1, 7), 7, 100), BoundaryCase);
  EXPECT_THROW(fourier_partial(Alpha::rational(0, 1), 7, 100), BoundaryCase);
}

TEST(TwistedSum, Probes) {
  for (std::uint64_t p : oracle::primes_up_to(5000)) {
    if (p == 2) continue;
    ASSERT_LE(twisted_sum_check(Alpha::rational(0, 1), p, p - 1).max_abs / (std::sqrt(double(p)) * std::log(double(p))), 1.0) << p;
  }
  // partial sums of (-1)^n (n/7): -1, 0, 1, 2, 3, 2
  EXPECT_NEAR(twisted_sum_check(Alpha::rational(1, 2), 7, 6).max_abs, 3.0, 1e-12);
  const auto one = twisted_sum_check(Alpha::real(0.3), 101, 1);
  EXPECT_NEAR(one.max_abs, 1.0, 1e-12);
  EXPECT_NEAR(one.ratio, 1.0 / (std::sqrt(101.0) * std::log(101.0)), 1e-12);
}
