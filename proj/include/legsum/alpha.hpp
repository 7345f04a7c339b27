#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace legsum {

/// A reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw DomainError("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// The position parameter of L(alpha, p): exact rational or a real sample point.
class Alpha {
 public:
  /// Tolerance within which alpha*p counts as hitting an integer for real alpha.
  static constexpr long double kBoundaryTolerance = 1e-9L;

  static Alpha rational(std::int64_t num, std::int64_t den) { return Alpha(Rational(num, den)); }
  static Alpha real(long double value) {
    if (!std::isfinite(value)) throw DomainError("Alpha: non-finite value");
    Alpha a;
    a.real_ = value;
    return a;
  }

  /// "a/b" or an integer -> exact rational; anything with '.' or an exponent -> real.
  static Alpha parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) {
      s = trim(s);
      std::int64_t v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw DomainError("Alpha: cannot parse integer '" + std::string(s) + "'");
      return v;
    };
    if (const auto slash = text.find('/'); slash != std::string_view::npos)
      return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    if (text.find_first_of(".eE") == std::string_view::npos) return rational(parse_int(text), 1);
    std::string s(text);
    std::size_t used = 0;
    long double v = 0;
    try {
      v = std::stold(s, &used);
    } catch (const std::exception&) {
      throw DomainError("Alpha: cannot parse '" + s + "'");
    }
    if (used != s.size()) throw DomainError("Alpha: trailing characters in '" + s + "'");
    return real(v);
  }

  bool is_exact() const { return exact_.has_value(); }
  const std::optional<Rational>& exact() const { return exact_; }
  long double value() const { return exact_ ? exact_->value() : real_; }

  /// floor(alpha * n). Integer arithmetic on the exact path. On the real path,
  /// `boundary` (if given) is set when alpha*n lies within kBoundaryTolerance of an integer.
  std::int64_t floor_times(std::uint64_t n, bool* boundary = nullptr) const {
    if (exact_) {
      const __int128 prod = static_cast<__int128>(exact_->num) * static_cast<__int128>(n);
      __int128 q = prod / exact_->den;
      if (prod % exact_->den != 0 && prod < 0) --q;
      if (boundary) *boundary = false;
      return static_cast<std::int64_t>(q);
    }
    const long double x = real_ * static_cast<long double>(n);
    const long double f = std::floor(x);
    if (boundary) *boundary = std::fabs(x - std::nearbyint(x)) < kBoundaryTolerance;
    return static_cast<std::int64_t>(f);
  }

  /// True when alpha*n is an integer (exactly for rationals, within 1e-12 relative otherwise).
  bool times_is_integer(std::uint64_t n) const {
    if (exact_) return (static_cast<__int128>(exact_->num) * n) % exact_->den == 0;
    const long double x = real_ * static_cast<long double>(n);
    return std::fabs(x - std::nearbyint(x)) < 1e-12L * std::max(1.0L, std::fabs(x));
  }

  /// Fractional part of alpha*n in [0,1) as an exact pair (r, den) when rational.
  std::optional<std::pair<std::int64_t, std::int64_t>> frac_times_exact(std::uint64_t n) const {
    if (!exact_) return std::nullopt;
    const std::int64_t den = exact_->den;
    __int128 r = (static_cast<__int128>(exact_->num) * n) % den;
    if (r < 0) r += den;
    return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(r), den};
  }

  std::string to_string() const {
    if (exact_) return exact_->den == 1 ? std::to_string(exact_->num)
                                        : std::to_string(exact_->num) + "/" + std::to_string(exact_->den);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", real_);
    return buf;
  }

 private:
  Alpha() = default;
  explicit Alpha(Rational r) : exact_(r) {}

  std::optional<Rational> exact_;
  long double real_ = 0;
};

}  // namespace legsum
