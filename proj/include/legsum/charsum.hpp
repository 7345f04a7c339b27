#pragma once

// Partial sums of Legendre symbols L(alpha, p) = sum_{n <= alpha p} (n/p),
// prime-range density scans, and Dirichlet's class-number identity.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alpha.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "primes.hpp"

namespace legsum {

/// Quadratic-residue prefix counts for one odd prime:
/// prefix[m] = #{ quadratic residues r mod p with 1 <= r <= m }, m = 0..p-1.
struct QRTable {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> prefix;

  /// sum_{n <= m} (n/p) for 0 <= m <= p-1.
  std::int64_t partial_sum(std::uint64_t m) const {
    return 2 * static_cast<std::int64_t>(prefix[m]) - static_cast<std::int64_t>(m);
  }
  /// (n/p) for any integer n >= 0.
  int symbol(std::uint64_t n) const {
    const std::uint64_t r = n % p;
    if (r == 0) return 0;
    return prefix[r] != prefix[r - 1] ? 1 : -1;
  }
};

namespace detail {

// Marks k^2 mod p for k = 1..(p-1)/2 and prefix-sums in place. No validation.
inline void fill_qr_prefix(std::uint64_t p, std::vector<std::uint32_t>& prefix) {
  prefix.assign(p, 0);
  std::uint64_t sq = 0;
  for (std::uint64_t k = 1; 2 * k < p; ++k) {
    sq += 2 * k - 1;
    if (sq >= p) sq -= p;
    prefix[sq] = 1;
  }
  for (std::uint64_t m = 1; m < p; ++m) prefix[m] += prefix[m - 1];
}

inline void require_alpha_unit(const Alpha& alpha, const char* who) {
  const long double v = alpha.value();
  if (!(v >= 0 && v < 1)) throw DomainError(std::string(who) + ": alpha " + alpha.to_string() + " outside [0,1)");
}

}  // namespace detail

inline QRTable build_qr_table(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw DomainError("build_qr_table: " + std::to_string(p) + " is not an odd prime");
  QRTable t{p, {}};
  detail::fill_qr_prefix(p, t.prefix);
  return t;
}

/// L(alpha, p) from a prebuilt table.
inline std::int64_t legendre_sum(const Alpha& alpha, const QRTable& table) {
  detail::require_alpha_unit(alpha, "legendre_sum");
  return table.partial_sum(static_cast<std::uint64_t>(alpha.floor_times(table.p)));
}

/// L(alpha, p) for an odd prime p; O(p).
inline std::int64_t legendre_sum(const Alpha& alpha, std::uint64_t p) {
  detail::require_alpha_unit(alpha, "legendre_sum");
  return legendre_sum(alpha, build_qr_table(p));
}

enum class Comparison { kNonNegative, kPositive };

inline const char* comparison_name(Comparison c) { return c == Comparison::kNonNegative ? "ge" : "gt"; }

/// Sign statistics of L(alpha, p) over the first prime_count primes.
///
/// p = 2 contributes L = 0 (counted as nonnegative and zero) and is not part
/// of the mod-4 splits, so nonneg_count = nonneg_1mod4 + nonneg_3mod4 + includes_two.
struct DensityReport {
  std::string alpha;
  Comparison mode = Comparison::kNonNegative;
  std::uint64_t prime_count = 0;
  std::uint64_t nonneg_count = 0;
  std::uint64_t strict_pos_count = 0;
  std::uint64_t zero_count = 0;
  std::uint64_t primes_1mod4 = 0;
  std::uint64_t primes_3mod4 = 0;
  std::uint64_t nonneg_1mod4 = 0;
  std::uint64_t nonneg_3mod4 = 0;
  std::uint64_t zero_1mod4 = 0;
  std::uint64_t zero_3mod4 = 0;
  std::uint64_t includes_two = 0;
  /// Real alpha only: primes where alpha*p was within 1e-9 of an integer.
  std::uint64_t boundary_hits = 0;
  std::uint64_t largest_prime = 0;

  /// The count selected by `mode`.
  std::uint64_t selected_count() const {
    return mode == Comparison::kNonNegative ? nonneg_count : strict_pos_count;
  }
};

/// density_scan for several alphas sharing one residue table per prime.
inline std::vector<DensityReport> density_scan_many(std::span<const Alpha> alphas, std::size_t num_primes,
                                                    Comparison mode = Comparison::kNonNegative,
                                                    unsigned threads = default_threads()) {
  if (num_primes == 0) throw DomainError("density_scan: num_primes must be >= 1");
  for (const Alpha& a : alphas) detail::require_alpha_unit(a, "density_scan");
  const std::vector<std::uint64_t> primes = first_primes(num_primes);

  using Partial = std::vector<DensityReport>;
  auto chunk_results = map_chunks<Partial>(primes.size(), 64, threads, [&](std::size_t begin, std::size_t end) {
    Partial part(alphas.size());
    std::vector<std::uint32_t> prefix;
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = primes[i];
      if (p == 2) {
        for (auto& r : part) {
          ++r.nonneg_count;
          ++r.zero_count;
          ++r.includes_two;
        }
        continue;
      }
      detail::fill_qr_prefix(p, prefix);
      const bool one_mod_4 = p % 4 == 1;
      for (std::size_t k = 0; k < alphas.size(); ++k) {
        bool boundary = false;
        const auto m = static_cast<std::uint64_t>(alphas[k].floor_times(p, &boundary));
        const std::int64_t value = 2 * static_cast<std::int64_t>(prefix[m]) - static_cast<std::int64_t>(m);
        DensityReport& r = part[k];
        r.boundary_hits += boundary;
        (one_mod_4 ? r.primes_1mod4 : r.primes_3mod4) += 1;
        if (value >= 0) {
          ++r.nonneg_count;
          (one_mod_4 ? r.nonneg_1mod4 : r.nonneg_3mod4) += 1;
        }
        if (value > 0) ++r.strict_pos_count;
        if (value == 0) {
          ++r.zero_count;
          (one_mod_4 ? r.zero_1mod4 : r.zero_3mod4) += 1;
        }
      }
    }
    return part;
  });

  std::vector<DensityReport> out(alphas.size());
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    DensityReport& r = out[k];
    r.alpha = alphas[k].to_string();
    r.mode = mode;
    r.prime_count = primes.size();
    r.largest_prime = primes.back();
    for (const Partial& part : chunk_results) {
      const DensityReport& c = part[k];
      r.nonneg_count += c.nonneg_count;
      r.strict_pos_count += c.strict_pos_count;
      r.zero_count += c.zero_count;
      r.primes_1mod4 += c.primes_1mod4;
      r.primes_3mod4 += c.primes_3mod4;
      r.nonneg_1mod4 += c.nonneg_1mod4;
      r.nonneg_3mod4 += c.nonneg_3mod4;
      r.zero_1mod4 += c.zero_1mod4;
      r.zero_3mod4 += c.zero_3mod4;
      r.includes_two += c.includes_two;
      r.boundary_hits += c.boundary_hits;
    }
  }
  return out;
}

/// Counts primes among the first num_primes with L(alpha, p) >= 0 / > 0 / = 0.
inline DensityReport density_scan(const Alpha& alpha, std::size_t num_primes,
                                  Comparison mode = Comparison::kNonNegative, unsigned threads = default_threads()) {
  return density_scan_many(std::span<const Alpha>(&alpha, 1), num_primes, mode, threads).front();
}

/// h(-p) for a prime p = 3 mod 4, by counting reduced forms (a,b,c) with
/// b^2 - 4ac = -p, |b| <= a <= c, and b > 0 whenever |b| = a or a = c.
inline std::uint64_t class_number_h(std::uint64_t p) {
  if (p % 4 != 3 || !is_prime(p)) throw DomainError("class_number_h: " + std::to_string(p) + " is not a prime = 3 mod 4");
  const auto P = static_cast<std::int64_t>(p);
  std::uint64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= P; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b & 1) == 0) continue;
      const std::int64_t num = b * b + P;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      ++count;
    }
  }
  return count;
}

struct DirichletCheck {
  std::uint64_t p = 0;
  std::int64_t lhs = 0;  ///< L(1/2, p)
  std::int64_t rhs = 0;  ///< 0 or (2 - (2/p)) h(-p)
  bool excluded = false; ///< p = 3, where the identity as stated does not apply
  bool pass = false;
};

/// L(1/2,p) = 0 for p = 1 mod 4 and (2 - (2/p)) h(-p) for p = 3 mod 4, p > 3.
inline DirichletCheck dirichlet_check(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw DomainError("dirichlet_check: " + std::to_string(p) + " is not an odd prime");
  DirichletCheck r;
  r.p = p;
  r.lhs = legendre_sum(Alpha::rational(1, 2), p);
  if (p % 4 == 1) {
    r.rhs = 0;
  } else {
    r.rhs = (2 - legendre(2, p)) * static_cast<std::int64_t>(class_number_h(p));
  }
  r.excluded = p == 3;
  r.pass = !r.excluded && r.lhs == r.rhs;
  return r;
}

/// Mean of (n/p) over primes p <= x with p = eps mod 4, skipping p | n.
inline double expectation_scan(std::uint64_t n, std::uint64_t x, int eps) {
  if (n == 0) throw DomainError("expectation_scan: n must be >= 1");
  if (x < 5) throw DomainError("expectation_scan: x must be >= 5");
  if (eps != 1 && eps != -1) throw DomainError("expectation_scan: eps must be +1 or -1");
  const std::uint64_t cls = eps == 1 ? 1 : 3;
  std::int64_t total = 0;
  std::uint64_t count = 0;
  for (std::uint64_t p : sieve_primes(x)) {
    if (p % 4 != cls || n % p == 0) continue;
    total += legendre(static_cast<std::int64_t>(n % p), p);
    ++count;
  }
  if (count == 0) throw EmptyPopulationError("expectation_scan: no primes p <= " + std::to_string(x) + " in the class coprime to n");
  return static_cast<double>(total) / static_cast<double>(count);
}

}  // namespace legsum
