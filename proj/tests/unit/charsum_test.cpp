#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <legsum/charsum.hpp>

#include "oracles.hpp"

using namespace legsum;

TEST(QRTable, SmallPrimes) {
  EXPECT_EQ(build_qr_table(7).prefix, (std::vector<std::uint32_t>{0, 1, 2, 2, 3, 3, 3}));
  EXPECT_EQ(build_qr_table(3).prefix, (std::vector<std::uint32_t>{0, 1, 1}));
  EXPECT_EQ(build_qr_table(23).prefix[11], 7u);
  EXPECT_THROW(build_qr_table(9), DomainError);
  EXPECT_THROW(build_qr_table(2), DomainError);
}

TEST(QRTable, SymbolMatchesEuler) {
  for (std::uint64_t p : {3ull, 5ull, 101ull, 4999ull}) {
    const auto t = build_qr_table(p);
    for (std::uint64_t n = 0; n < 3 * p; ++n) ASSERT_EQ(t.symbol(n), oracle::euler_symbol(static_cast<std::int64_t>(n), p));
  }
}

TEST(LegendreSum, Examples) {
  EXPECT_EQ(legendre_sum(Alpha::rational(1, 2), 7), 1);
  EXPECT_EQ(legendre_sum(Alpha::rational(1, 2), 23), 3);
  EXPECT_EQ(legendre_sum(Alpha::rational(1, 3), 7), 2);
  for (std::uint64_t p : {3ull, 5ull, 7919ull}) EXPECT_EQ(legendre_sum(Alpha::rational(0, 1), p), 0);
  EXPECT_THROW(legendre_sum(Alpha::rational(1, 1), 7), DomainError);
  EXPECT_THROW(legendre_sum(Alpha::real(-0.1L), 7), DomainError);
}

TEST(LegendreSum, MatchesBruteForceOnRandomPairs) {
  const auto primes = oracle::primes_up_to(5000);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(1, primes.size() - 1);
  std::uniform_int_distribution<std::int64_t> den(2, 1000);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = primes[pick(rng)];
    const std::int64_t d = den(rng);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng);
    const std::int64_t got = legendre_sum(Alpha::rational(n, d), p);
    ASSERT_EQ(got, oracle::legendre_sum(n, d, p)) << n << "/" << d << " p=" << p;
    const double pd = static_cast<double>(p);
    ASSERT_LE(std::abs(got), std::min(static_cast<double>(n * static_cast<std::int64_t>(p) / d), std::sqrt(pd) * std::log(pd)));
  }
}

TEST(LegendreSum, RealAlphaUsesFloor) {
  const Alpha a = Alpha::real(0.15915494309189533577L);
  for (std::uint64_t p : {101ull, 1009ull, 7919ull}) {
    const auto m = static_cast<std::int64_t>(std::floor(0.15915494309189533577L * p));
    std::int64_t s = 0;
    for (std::int64_t n = 1; n <= m; ++n) s += oracle::euler_symbol(n, p);
    EXPECT_EQ(legendre_sum(a, p), s);
  }
}

TEST(LegendreSum, HalfIsNonnegative) {
  for (std::uint64_t p : oracle::primes_up_to(3000))
    if (p > 2) {
      ASSERT_GE(legendre_sum(Alpha::rational(1, 2), p), 0) << p;
    }
}

TEST(DensityScan, ZeroAlphaAndModFourSplits) {
  const auto z = density_scan(Alpha::rational(0, 1), 500, Comparison::kNonNegative, 1);
  EXPECT_EQ(z.nonneg_count, z.prime_count);
  const auto h = density_scan(Alpha::rational(1, 2), 2000, Comparison::kNonNegative, 1);
  EXPECT_EQ(h.zero_1mod4, h.primes_1mod4);
  EXPECT_EQ(h.nonneg_count, h.prime_count);
  EXPECT_EQ(h.nonneg_count, h.nonneg_1mod4 + h.nonneg_3mod4 + h.includes_two);
  EXPECT_EQ(h.includes_two, 1u);
}

TEST(DensityScan, AgreesWithBruteForceCounts) {
  const auto primes = oracle::primes_up_to(3000);
  for (auto [n, d] : {std::pair{2, 5}, {3, 8}, {1, 12}}) {
    std::uint64_t nonneg = 0, pos = 0;
    for (std::uint64_t p : primes) {
      const std::int64_t v = p == 2 ? 0 : oracle::legendre_sum(n, d, p);
      nonneg += v >= 0;
      pos += v > 0;
    }
    const auto ge = density_scan(Alpha::rational(n, d), primes.size(), Comparison::kNonNegative, 1);
    const auto gt = density_scan(Alpha::rational(n, d), primes.size(), Comparison::kPositive, 1);
    EXPECT_EQ(ge.selected_count(), nonneg);
    EXPECT_EQ(gt.selected_count(), pos);
    EXPECT_EQ(ge.largest_prime, primes.back());
  }
}

TEST(DensityScan, ThreadCountDoesNotChangeResult) {
  const std::vector<Alpha> alphas = {Alpha::rational(2, 5), Alpha::real(0.36787944117144232160L)};
  const auto one = density_scan_many(alphas, 3000, Comparison::kNonNegative, 1);
  const auto four = density_scan_many(alphas, 3000, Comparison::kNonNegative, 4);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    EXPECT_EQ(one[k].nonneg_count, four[k].nonneg_count);
    EXPECT_EQ(one[k].strict_pos_count, four[k].strict_pos_count);
    EXPECT_EQ(one[k].zero_count, four[k].zero_count);
  }
}

TEST(DensityScan, RejectsBadInput) {
  EXPECT_THROW(density_scan(Alpha::rational(1, 3), 0), DomainError);
  EXPECT_THROW(density_scan(Alpha::rational(4, 3), 10), DomainError);
}

TEST(ClassNumber, SmallCases) {
  EXPECT_EQ(class_number_h(3), 1u);
  EXPECT_EQ(class_number_h(7), 1u);
  EXPECT_EQ(class_number_h(23), 3u);
  EXPECT_THROW(class_number_h(13), DomainError);
  EXPECT_THROW(class_number_h(15), DomainError);
}

TEST(ClassNumber, MatchesDirichletFormula) {
  for (std::uint64_t p : oracle::primes_up_to(5000))
    if (p % 4 == 3 && p > 3) {
      ASSERT_EQ(static_cast<std::int64_t>(class_number_h(p)), oracle::class_number(p)) << p;
    }
}

TEST(Dirichlet, Examples) {
  auto c13 = dirichlet_check(13);
  EXPECT_TRUE(c13.pass);
  EXPECT_EQ(c13.lhs, 0);
  auto c7 = dirichlet_check(7);
  EXPECT_EQ(c7.lhs, 1);
  EXPECT_EQ(c7.rhs, 1);
  auto c23 = dirichlet_check(23);
  EXPECT_EQ(c23.lhs, 3);
  EXPECT_TRUE(c23.pass);
  auto c3 = dirichlet_check(3);
  EXPECT_TRUE(c3.excluded);
  EXPECT_FALSE(c3.pass);
  EXPECT_THROW(dirichlet_check(9), DomainError);
}

TEST(ExpectationScan, SquaresAndNonSquares) {
  EXPECT_DOUBLE_EQ(expectation_scan(4, 13, 1), 1.0);
  EXPECT_DOUBLE_EQ(expectation_scan(1, 1000, -1), 1.0);
  EXPECT_DOUBLE_EQ(expectation_scan(36, 10000, -1), 1.0);
  EXPECT_LT(std::fabs(expectation_scan(2, 1'000'000, 1)), 0.01);
  EXPECT_THROW(expectation_scan(5, 5, 1), EmptyPopulationError);
  EXPECT_THROW(expectation_scan(2, 3, 1), DomainError);
}
