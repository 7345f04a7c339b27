#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <legsum/constants.hpp>
#include <legsum/tails.hpp>

#include "oracles.hpp"

using namespace legsum;

TEST(SubGaussian, Values) {
  EXPECT_NEAR(subgaussian_tail(0.395, 1), std::exp(-1 / 0.79), 1e-15);
  EXPECT_NEAR(subgaussian_tail(0.395, 1), 0.2820, 1e-4);
  EXPECT_NEAR(subgaussian_tail(0.395, 1e-9), 1.0, 1e-12);
  EXPECT_THROW(subgaussian_tail(0, 1), DomainError);
  EXPECT_THROW(subgaussian_tail(1, -1), DomainError);
}

TEST(SubGaussian, MomentGeneratingBound) {
  for (int i = -1000; i <= 1000; ++i) {
    const double t = i / 100.0;
    ASSERT_LE(std::cosh(t), std::exp(t * t / 2) * (1 + 1e-15));
  }
}

TEST(NegativityBound, PrintedPoints) {
  EXPECT_LE(negativity_bound(0.395, 0.015, 0.0756), 0.32);
  EXPECT_LE(negativity_bound(0.395, 0.0447, 0.12957), 0.612);
  EXPECT_LT(negativity_bound(0.395, 0, 1e-6), 1e-6);
  EXPECT_THROW(negativity_bound(0.395, 0.01, 0), DomainError);
  EXPECT_THROW(negativity_bound(0.395, 0.01, 1), DomainError);
  EXPECT_THROW(negativity_bound(0.395, -0.01, 0.5), DomainError);
}

TEST(OptimizeU, ReproducesPrintedOptima) {
  const auto m = optimize_u(0.395, 0.015);
  EXPECT_NEAR(m.u, 0.0756, 1e-3);
  EXPECT_LE(m.value, 0.32);
  const auto p = optimize_u(0.395, 0.0447);
  EXPECT_NEAR(p.u, 0.12957, 1e-3);
  EXPECT_LE(p.value, 0.612);
  EXPECT_FALSE(m.degenerate);
}

TEST(OptimizeU, MatchesDenseGrid) {
  for (double D : {0.001, 0.015, 0.0447, 0.2}) {
    double best = INFINITY, best_u = 0;
    for (int i = 1; i < 200000; ++i) {
      const double u = i / 200000.0;
      const double v = negativity_bound(0.395, D, u);
      if (v < best) {
        best = v;
        best_u = u;
      }
    }
    const auto o = optimize_u(0.395, D);
    EXPECT_LE(o.value, best + 1e-12);
    EXPECT_NEAR(o.u, best_u, 1e-4);
  }
}

TEST(OptimizeU, VanishingD) {
  double last_u = 1, last_v = 1;
  for (double D = 1e-2; D > 1e-9; D /= 10) {
    const auto o = optimize_u(0.395, D);
    EXPECT_LT(o.u, last_u);
    EXPECT_LT(o.value, last_v);
    last_u = o.u;
    last_v = o.value;
  }
  EXPECT_LT(last_v, 0.01);
  const auto zero = optimize_u(0.395, 0);
  EXPECT_TRUE(zero.degenerate);
  EXPECT_EQ(zero.value, 0);
  EXPECT_TRUE(optimize_u(0.395, 1.5).degenerate);
}

TEST(Sigma2, BoundAndPieces) {
  const auto s = sigma2_one_third(1'000'000);
  EXPECT_LT(s.total, 0.395);
  EXPECT_NEAR(0.25 * std::pow(std::log(1.0 / 3), 2), 0.3017, 1e-4);
  const auto small = sigma2_one_third(10000);
  EXPECT_GE(small.total, small.partial);
  EXPECT_LE(small.partial, s.partial);
  EXPECT_LE(sigma2_one_third(100).partial, small.partial);
  EXPECT_THROW(sigma2_one_third(50), DomainError);
}

TEST(Sigma2, TailBoundCoversOmittedTerms) {
  const std::uint64_t cutoff = 1000;
  double omitted = 0;
  for (std::uint64_t p : sieve_primes(2'000'000))
    if (p > cutoff) omitted += 0.25 * std::pow(std::log((p - 1.0) / (p + 1.0)), 2);
  const auto s = sigma2_one_third(cutoff);
  EXPECT_LE(omitted, s.tail_bound);
  EXPECT_LE(s.partial + omitted, sigma2_one_third(2'000'000).partial + 1e-15);
}

TEST(Lemma7, IdentityHolds) {
  for (int sign : {1, -1}) {
    const auto c = lemma7_identity_check(MultiplicativeSample::constant(sign), 1000);
    EXPECT_TRUE(c.pass) << c.rel_err_minus << " " << c.rel_err_plus;
  }
  const auto plus = lemma7_identity_check(MultiplicativeSample::constant(1), 1000);
  const auto minus = lemma7_identity_check(MultiplicativeSample::constant(-1), 1000);
  EXPECT_NEAR(plus.eta_minus, -minus.eta_minus, 1e-12);
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_TRUE(lemma7_identity_check(MultiplicativeSample(seed), 1000).pass);
}

TEST(Lemma7, LeftSideIsTheEulerProduct) {
  const MultiplicativeSample s(17);
  const auto c = lemma7_identity_check(s, 1000);
  EXPECT_NEAR(c.lhs_minus, euler_eval(decompose_rational(Rational(1, 3), Parity::kMinus), s, 1000), 1e-12 * c.lhs_minus);
  EXPECT_NEAR(c.lhs_plus, euler_eval(decompose_rational(Rational(1, 3), Parity::kPlus), s, 1000), 1e-12 * c.lhs_plus);
}

TEST(Lemma7, Normalizers) {
  const auto c = lemma7_identity_check(MultiplicativeSample(1), 1'000'000);
  EXPECT_NEAR(c.normalizer_minus, std::numbers::pi / std::sqrt(3.0), 1e-6);
  EXPECT_NEAR(c.normalizer_plus, std::numbers::pi / 3, 1e-6);
  EXPECT_NEAR(c.normalizer_minus, 1.8138, 1e-4);
  EXPECT_NEAR(c.normalizer_plus, 1.0472, 1e-4);
}

TEST(Zeta, KnownValues) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(zeta(2), pi * pi / 6, 1e-12);
  EXPECT_NEAR(zeta(4), std::pow(pi, 4) / 90, 1e-12);
  EXPECT_NEAR(zeta(4.0 / 3, 100000), zeta(4.0 / 3, 20000), 1e-8);
  EXPECT_THROW(zeta(1), DomainError);
}

TEST(Zeta, TauOfSquares) {
  EXPECT_EQ(tau_of_square(6), 9u);
  EXPECT_EQ(tau_of_square(2) * tau_of_square(3), 9u);
  for (std::uint64_t n = 1; n < 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n * n; ++d) count += (n * n) % d == 0;
    ASSERT_EQ(tau_of_square(n), count) << n;
  }
}

TEST(Zeta, RatioCheck) {
  const auto z = zeta_ratio_check(1'000'000);
  EXPECT_TRUE(z.pass);
  EXPECT_LT(z.ratio_times_2_43, 92);
  EXPECT_LT(z.partial_4_3, z.ratio);
  EXPECT_NEAR(z.partial_2, z.limit_2, 1e-3);
  EXPECT_LT(z.partial_2, z.limit_2);
}

TEST(DistanceBound, Values) {
  EXPECT_NEAR(distance_bound(2 * std::numbers::pi, 1, 1), 313.3, 0.5);
  EXPECT_NEAR(distance_bound(2 * std::numbers::pi, 1, 1), 92 * std::pow(2 * std::numbers::pi, 2.0 / 3), 1e-10);
  EXPECT_EQ(distance_bound(2 * std::numbers::pi, 1, 0), 0);
  EXPECT_NEAR(kPrintedDistanceConstant * std::pow(2e-6, 2.0 / 3), 0.0497, 1e-4);
  EXPECT_THROW(distance_bound(0, 1, 1), DomainError);
}

TEST(EmpiricalDistance, OracleAndBound) {
  const auto same = empirical_distance(Alpha::rational(1, 3), Alpha::rational(1, 3), Parity::kMinus, 500, 100, 0, 1);
  EXPECT_EQ(same.exact_truncated, 0);
  EXPECT_EQ(same.mc_estimate, 0);

  const Alpha a = Alpha::rational(1, 3), b = Alpha::rational(1003, 3000);
  const auto d = empirical_distance(a, b, Parity::kMinus, 10000, 10000, 1, 2);
  EXPECT_LE(d.exact_truncated, kPrintedDistanceConstant * std::pow(1e-3, 2.0 / 3));
  EXPECT_LT(std::fabs(d.mc_estimate - d.exact_truncated), 3 * d.mc_stderr);

  // brute-force nm = square double sum at small N
  const std::size_t N = 400;
  const auto small = empirical_distance(a, b, Parity::kPlus, N, 10, 0, 1);
  const CoefficientSpec sa{Parity::kPlus, a}, sb{Parity::kPlus, b};
  double want = 0;
  for (std::uint64_t n = 1; n <= N; ++n)
    for (std::uint64_t m = 1; m <= N; ++m) {
      const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n * m))));
      if (r * r == n * m) want += (sa(n) - sb(n)) * (sa(m) - sb(m)) / static_cast<double>(n * m);
    }
  EXPECT_NEAR(small.exact_truncated, want, 1e-12);
}

TEST(Certify, PrintedConstantsGive0534) {
  for (const char* text : {"1000003/3000000", "999997/3000000"}) {
    const auto r = certify_neighborhood(Alpha::parse(text), ConstantPolicy::kPrinted);
    EXPECT_NEAR(r.delta, 1e-6, 1e-18);
  }
  const auto edge = certify_neighborhood(Alpha::rational(1000006, 3000000), ConstantPolicy::kPrinted);
  EXPECT_NEAR(edge.delta, 2e-6, 1e-18);
  EXPECT_GE(edge.c_lower, 0.534);
  EXPECT_TRUE(edge.certified);
  EXPECT_NEAR(edge.c_lower, 1 - (edge.p_neg_minus + edge.p_neg_plus) / 2, 1e-15);
}

TEST(Certify, DefaultPolicyStillCertifies) {
  const auto r = certify_neighborhood(Alpha::rational(1000006, 3000000));
  EXPECT_EQ(r.policy, ConstantPolicy::kConservative);
  EXPECT_GT(r.c_lower, 0.5);
  EXPECT_TRUE(r.certified);
  EXPECT_NEAR(r.k_minus, recomputed_k_minus(), 1e-12);
  EXPECT_NEAR(r.k_minus, 3 / (std::numbers::pi * std::numbers::pi) * 313.3, 1e-12);
}

TEST(Certify, DegenerateAndFarPoints) {
  const auto at = certify_neighborhood(Alpha::rational(1, 3));
  EXPECT_EQ(at.delta, 0);
  EXPECT_EQ(at.c_lower, 1);
  EXPECT_FALSE(at.note.empty());
  const auto far = certify_neighborhood(Alpha::rational(1003, 3000));
  EXPECT_FALSE(far.certified);
  EXPECT_LT(far.c_lower, 0.5);
}

TEST(Certify, MonotoneInDelta) {
  double last = 1.0;
  for (int i = 0; i <= 40; ++i) {
    const double delta = 1e-7 * i;
    const auto r = certify_neighborhood(Alpha::real(1.0L / 3 + delta));
    EXPECT_LE(r.c_lower, last + 1e-12) << delta;
    EXPECT_GE(r.p_neg_minus, 0);
    EXPECT_LE(r.p_neg_plus, 1);
    last = r.c_lower;
  }
}

TEST(Certify, PrintedIntermediateConstants) {
  const double scale = std::pow(kCertifiedRadius, 2.0 / 3);
  EXPECT_LE(kPrintedKMinus * scale, 0.015);
  EXPECT_LE(kPrintedKPlus * scale, 0.0447);
}

TEST(Constants, TableHasRecomputedValues) {
  const auto rows = constant_table(100000, 100000);
  ASSERT_FALSE(rows.empty());
  bool saw_sigma = false;
  for (const auto& r : rows) {
    if (r.name.rfind("sigma2", 0) == 0) saw_sigma = true;
    EXPECT_TRUE(std::isfinite(r.recomputed)) << r.name;
  }
  EXPECT_TRUE(saw_sigma);
}
