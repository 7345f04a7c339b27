#pragma once

// Prime tables and quadratic symbols.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace legsum {

/// Primes up to a sieve bound, with residue-class-mod-4 counts.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
  std::size_t count_1mod4 = 0;
  std::size_t count_3mod4 = 0;

  std::size_t size() const { return primes.size(); }
  auto begin() const { return primes.begin(); }
  auto end() const { return primes.end(); }
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd-only Eratosthenes: bit i stands for 2i+1.
inline std::vector<std::uint64_t> sieve_plain(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  out.push_back(2);
  const std::uint64_t half = (limit + 1) / 2;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  for (std::uint64_t i = 1; i < half; ++i)
    if (!composite[i]) out.push_back(2 * i + 1);
  return out;
}

// Segmented sieve over odd numbers, 2^20 candidates per segment.
inline std::vector<std::uint64_t> sieve_segmented(std::uint64_t limit) {
  if (limit < 4) return sieve_plain(limit);
  const std::vector<std::uint64_t> base = sieve_plain(isqrt(limit));
  std::vector<std::uint64_t> out = base;
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 21;
  std::vector<bool> composite;
  for (std::uint64_t low = base.empty() ? 2 : base.back() + 1; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(limit, low + kSegment - 1);
    composite.assign(high - low + 1, false);
    for (std::size_t k = 1; k < base.size(); ++k) {
      const std::uint64_t p = base[k];
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= high; m += 2 * p) composite[m - low] = true;
    }
    for (std::uint64_t n = low | 1; n <= high; n += 2)
      if (!composite[n - low]) out.push_back(n);
  }
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

/// All primes <= limit. Limits above 2^26 use a segmented sieve.
inline PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw EmptyTableError("sieve_primes: limit " + std::to_string(limit) + " < 2 has no primes");
  PrimeTable t;
  t.limit = limit;
  t.primes = limit > (std::uint64_t{1} << 26) ? detail::sieve_segmented(limit) : detail::sieve_plain(limit);
  for (std::uint64_t p : t.primes) {
    if (p % 4 == 1) ++t.count_1mod4;
    if (p % 4 == 3) ++t.count_3mod4;
  }
  return t;
}

/// The first `count` primes.
inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // Rosser's bound p_n < n(ln n + ln ln n) for n >= 6; retry doubles on the off chance.
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  auto bound = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 10;
  for (;;) {
    PrimeTable t = sieve_primes(bound);
    if (t.primes.size() >= count) {
      t.primes.resize(count);
      return std::move(t.primes);
    }
    bound *= 2;
  }
}

/// The n-th prime, 1-based.
inline std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw DomainError("nth_prime: n must be >= 1");
  return first_primes(n).back();
}

/// Jacobi symbol (a/n) for odd n >= 1, by the binary reciprocity algorithm.
inline int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw DomainError("jacobi: modulus must be odd and positive, got " + std::to_string(n));
  auto m = static_cast<std::uint64_t>(n);
  std::uint64_t x = a >= 0 ? static_cast<std::uint64_t>(a) % m
                           : (m - static_cast<std::uint64_t>(-(a + 1)) % m - 1) % m;
  int t = 1;
  while (x != 0) {
    const int tz = __builtin_ctzll(x);
    x >>= tz;
    // (2/m) = -1 iff m = 3, 5 mod 8
    if ((tz & 1) && ((m & 7) == 3 || (m & 7) == 5)) t = -t;
    if ((x & 3) == 3 && (m & 3) == 3) t = -t;
    const std::uint64_t r = m % x;
    m = x;
    x = r;
  }
  return m == 1 ? t : 0;
}

/// Kronecker symbol (a/n) for all integers n.
inline int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  std::uint64_t m;
  if (n < 0) {
    m = static_cast<std::uint64_t>(-(n + 1)) + 1;
    if (a < 0) result = -result;
  } else {
    m = static_cast<std::uint64_t>(n);
  }
  const int twos = __builtin_ctzll(m);
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    // (a/2) = 1 if a = +-1 mod 8, -1 if a = +-3 mod 8
    const std::int64_t r8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
    m >>= twos;
  }
  if (m == 1) return result;
  return result * jacobi(a, static_cast<std::int64_t>(m));
}

/// The real character chi_a attached to a nonzero a: (a/n) when a = 0,1 mod 4,
/// otherwise (4a/n). Agrees with (a/n) on odd n > 0 and has period dividing 4|a|.
inline int kronecker_chi(std::int64_t a, std::int64_t n) {
  if (a == 0) throw DomainError("kronecker_chi: a must be nonzero");
  const std::int64_t r4 = ((a % 4) + 4) % 4;
  return kronecker(r4 <= 1 ? a : 4 * a, n);
}

/// A period of n -> kronecker_chi(a, n): |a| when a = 0,1 mod 4, else 4|a|.
inline std::uint64_t kronecker_period(std::int64_t a) {
  if (a == 0) throw DomainError("kronecker_period: a must be nonzero");
  const std::uint64_t abs_a = a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1 : static_cast<std::uint64_t>(a);
  const std::int64_t r4 = ((a % 4) + 4) % 4;
  return (r4 == 0 || r4 == 1) ? abs_a : 4 * abs_a;
}

/// spf[n] = smallest prime factor of n for 2 <= n <= limit (spf[0] = spf[1] = 0).
inline std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  return spf;
}

/// Legendre symbol (a/p) for an odd prime p.
inline int legendre(std::int64_t a, std::uint64_t p) { return jacobi(a, static_cast<std::int64_t>(p)); }

}  // namespace legsum
