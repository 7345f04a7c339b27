#pragma once

// Closed-form expansions of a+-_n(alpha) for rational alpha with denominator
// in {1,2,3,4,5,6,8,12} as finite sums coeff * chi(n/d) of periodic completely
// multiplicative sequences, and their Euler-product evaluation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "alpha.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "sample.hpp"
#include "series.hpp"

namespace legsum {

using cplx = std::complex<double>;

/// A periodic sequence given by its values on one period, values[n % period].
struct Character {
  std::string name;
  std::uint64_t period = 1;
  std::vector<cplx> values;

  cplx operator()(std::uint64_t n) const { return values[n % period]; }
  bool is_real() const {
    for (const cplx& v : values)
      if (v.imag() != 0) return false;
    return true;
  }
};

namespace characters {

/// chi_{0,q}: 1 on integers coprime to q.
inline Character principal(std::uint64_t q) {
  Character c{"chi0_" + std::to_string(q), q, std::vector<cplx>(q)};
  for (std::uint64_t n = 0; n < q; ++n) c.values[n] = std::gcd(n, q) == 1 ? 1.0 : 0.0;
  return c;
}

/// n -> (a/n), Kronecker symbol with fixed top argument.
inline Character kronecker_top(std::int64_t a) {
  const std::uint64_t q = kronecker_period(a);
  Character c{"(" + std::to_string(a) + "/n)", q, std::vector<cplx>(q)};
  // n = 0 is represented by n = q in the same residue class
  for (std::uint64_t n = 1; n <= q; ++n) c.values[n % q] = kronecker(a, static_cast<std::int64_t>(n));
  return c;
}

/// n -> (n/p), Legendre symbol with fixed odd prime modulus.
inline Character legendre_bottom(std::uint64_t p) {
  Character c{"(n/" + std::to_string(p) + ")", p, std::vector<cplx>(p)};
  for (std::uint64_t n = 0; n < p; ++n) c.values[n] = legendre(static_cast<std::int64_t>(n), p);
  return c;
}

inline Character product(const Character& a, const Character& b) {
  const std::uint64_t q = std::lcm(a.period, b.period);
  Character c{a.name + "*" + b.name, q, std::vector<cplx>(q)};
  for (std::uint64_t n = 0; n < q; ++n) c.values[n] = a(n) * b(n);
  return c;
}

inline Character conjugate(const Character& a) {
  Character c{"conj " + a.name, a.period, a.values};
  for (cplx& v : c.values) v = std::conj(v);
  return c;
}

/// The quartic character mod 5 with kappa(2) = i: 1 -> 1, 2 -> i, 3 -> -i, 4 -> -1.
inline Character kappa5() { return {"kappa5", 5, {0.0, 1.0, cplx(0, 1), cplx(0, -1), -1.0}}; }

}  // namespace characters

/// coeff * chi(n / dilation), zero unless dilation | n.
struct DecompositionTerm {
  cplx coeff;
  Character chi;
  std::uint64_t dilation = 1;

  cplx operator()(std::uint64_t n) const { return n % dilation ? cplx(0) : coeff * chi(n / dilation); }
};

struct RationalDecomposition {
  Rational alpha;
  Parity parity = Parity::kPlus;
  std::vector<DecompositionTerm> terms;

  cplx operator()(std::uint64_t n) const {
    cplx s = 0;
    for (const auto& t : terms) s += t(n);
    return s;
  }

  /// lcm of period * dilation over all terms (1 when empty).
  std::uint64_t full_period() const {
    std::uint64_t l = 1;
    for (const auto& t : terms) l = std::lcm(l, t.chi.period * t.dilation);
    return l;
  }

  /// Sum of |coeff|, the natural magnitude scale of the series.
  double scale() const {
    double s = 0;
    for (const auto& t : terms) s += std::abs(t.coeff);
    return s;
  }
};

inline bool decomposition_supported(std::int64_t den) {
  switch (den) {
    case 1: case 2: case 3: case 4: case 5: case 6: case 8: case 12: return true;
    default: return false;
  }
}

/// Character expansion of a+-_n(alpha) for rational alpha in [0, 1).
inline RationalDecomposition decompose_rational(const Rational& alpha, Parity parity) {
  if (alpha.num < 0 || alpha.num >= alpha.den)
    throw DomainError("decompose_rational: alpha must lie in [0,1)");
  if (!decomposition_supported(alpha.den))
    throw UnsupportedAlphaError("decompose_rational: denominator " + std::to_string(alpha.den) +
                                " not in {1,2,3,4,5,6,8,12}");
  namespace ch = characters;
  const bool plus = parity == Parity::kPlus;
  // a+(1 - alpha) = -a+(alpha), a-(1 - alpha) = a-(alpha)
  const bool reflect = 2 * alpha.num > alpha.den;
  const Rational base = reflect ? Rational(alpha.den - alpha.num, alpha.den) : alpha;
  const double r3 = std::sqrt(3.0) / 2;
  const double r2 = std::sqrt(2.0) / 2;
  const double r5 = std::sqrt(5.0) / 4;

  std::vector<DecompositionTerm> t;
  const std::int64_t a = base.num, q = base.den;
  if (q == 1) {
    // a_n(0) = 0
  } else if (q == 2) {
    if (!plus) t = {{2.0, ch::principal(2), 1}};
  } else if (q == 3) {
    t = plus ? std::vector<DecompositionTerm>{{r3, ch::legendre_bottom(3), 1}}
             : std::vector<DecompositionTerm>{{1.5, ch::principal(3), 1}};
  } else if (q == 4) {
    if (plus)
      t = {{1.0, ch::kronecker_top(-4), 1}};
    else
      t = {{1.0, ch::principal(2), 1}, {2.0, ch::principal(2), 2}};
  } else if (q == 6) {
    if (plus)
      t = {{r3, ch::product(ch::principal(2), ch::legendre_bottom(3)), 1}, {r3, ch::legendre_bottom(3), 2}};
    else
      t = {{2.0, ch::principal(2), 3}, {0.5, ch::principal(3), 1}, {1.0, ch::principal(3), 2}};
  } else if (q == 8) {
    const double s = a == 1 ? 1.0 : -1.0;  // a = 3 uses a_{3n}(1/8) and (2/3) = -1, chi_4(3) = -1
    if (plus)
      t = {{r2, ch::kronecker_top(-2), 1}, {s, ch::kronecker_top(-4), 2}};
    else
      t = {{1.0, ch::principal(2), 1}, {1.0, ch::principal(2), 2}, {2.0, ch::principal(2), 4},
           {-s * r2, ch::kronecker_top(2), 1}};
  } else if (q == 12) {
    const double s = a == 1 ? 1.0 : -1.0;  // a = 5 uses a_{5n}(1/12)
    if (plus)
      t = {{0.5, ch::product(ch::kronecker_top(-4), ch::principal(3)), 1},
           {s * r3, ch::product(ch::principal(2), ch::legendre_bottom(3)), 2},
           {1.0, ch::kronecker_top(-4), 3},
           {s * r3, ch::legendre_bottom(3), 4}};
    else
      t = {{-s * r3, ch::kronecker_top(12), 1},
           {1.0, ch::principal(2), 1},
           {0.5, ch::principal(6), 2},
           {1.5, ch::principal(3), 4},
           {2.0, ch::principal(2), 6}};
  } else if (q == 5) {
    const double A = std::sqrt((5 + std::sqrt(5.0)) / 8);
    const double B = std::sqrt((5 - std::sqrt(5.0)) / 8);
    if (plus) {
      // sin(2 pi n/5) = Re((A - iB) kappa(n)); for 2/5 multiply by kappa(2) = i
      const cplx c = a == 1 ? cplx(A, -B) : cplx(B, A);
      t = {{c / 2.0, ch::kappa5(), 1}, {std::conj(c) / 2.0, ch::conjugate(ch::kappa5()), 1}};
    } else {
      const double s = a == 1 ? -1.0 : 1.0;
      t = {{1.25, ch::principal(5), 1}, {s * r5, ch::legendre_bottom(5), 1}};
    }
  }
  if (reflect && plus)
    for (auto& term : t) term.coeff = -term.coeff;
  return {alpha, parity, std::move(t)};
}

/// Euler-product evaluator for a decomposition, truncated at primes <= P.
/// Each term contributes coeff * X_d / d * prod_{p<=P} (1 - chi(p) X_p / p)^{-1};
/// the value is the real part of the sum.
class EulerKernel {
 public:
  EulerKernel(RationalDecomposition decomp, std::uint64_t prime_cutoff)
      : decomp_(std::move(decomp)), primes_(prime_cutoff >= 2 ? sieve_primes(prime_cutoff).primes : std::vector<std::uint64_t>{}) {
    chi_at_primes_.resize(decomp_.terms.size());
    for (std::size_t k = 0; k < decomp_.terms.size(); ++k) {
      auto& v = chi_at_primes_[k];
      v.reserve(primes_.size());
      for (std::uint64_t p : primes_) v.push_back(decomp_.terms[k].chi(p));
    }
  }

  const RationalDecomposition& decomposition() const { return decomp_; }
  std::span<const std::uint64_t> primes() const { return primes_; }

  /// prod_{p<=P} (1 - chi_k(p) X_p / p)^{-1} for term k.
  cplx term_product(std::size_t k, std::span<const std::int8_t> x_at_primes) const {
    const auto& chi = chi_at_primes_[k];
    if (decomp_.terms[k].chi.is_real()) {
      double prod = 1;
      for (std::size_t i = 0; i < primes_.size(); ++i)
        prod /= 1 - chi[i].real() * x_at_primes[i] / static_cast<double>(primes_[i]);
      return prod;
    }
    cplx prod = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      prod /= 1.0 - chi[i] * static_cast<double>(x_at_primes[i]) / static_cast<double>(primes_[i]);
    return prod;
  }

  double operator()(const MultiplicativeSample& sample) const {
    std::vector<std::int8_t> xp(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) xp[i] = static_cast<std::int8_t>(sample.at_prime(primes_[i]));
    cplx total = 0;
    for (std::size_t k = 0; k < decomp_.terms.size(); ++k) {
      const auto& term = decomp_.terms[k];
      total += term.coeff * static_cast<double>(sample.at(term.dilation)) / static_cast<double>(term.dilation) *
               term_product(k, xp);
    }
    return total.real();
  }

 private:
  RationalDecomposition decomp_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::vector<cplx>> chi_at_primes_;
};

inline double euler_eval(const RationalDecomposition& decomp, const MultiplicativeSample& sample,
                         std::uint64_t prime_cutoff) {
  return EulerKernel(decomp, prime_cutoff)(sample);
}

/// prod_{p<=P} (1 - chi(p) X_p / p)^{-1} for a single character.
inline cplx euler_product(const Character& chi, const MultiplicativeSample& sample, std::uint64_t prime_cutoff) {
  const EulerKernel k({Rational(0, 1), Parity::kPlus, {{1.0, chi, 1}}}, prime_cutoff);
  std::vector<std::int8_t> xp;
  for (std::uint64_t p : k.primes()) xp.push_back(static_cast<std::int8_t>(sample.at_prime(p)));
  return k.term_product(0, xp);
}

}  // namespace legsum
