#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Every output block is a pure function of (key, counter), so any single
// random value can be recomputed without replaying a stream.

#include <array>
#include <cstdint>

namespace legsum {

class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;

  explicit constexpr Philox4x32(std::uint64_t key)
      : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)} {}

  /// The 128-bit output block for a 128-bit counter given as two 64-bit halves.
  constexpr Block operator()(std::uint64_t lo, std::uint64_t hi = 0) const {
    Block ctr{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(lo >> 32),
              static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(hi >> 32)};
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
      k0 += kWeylA;
      k1 += kWeylB;
    }
    return ctr;
  }

  /// 64 random bits for a 64-bit counter.
  constexpr std::uint64_t bits64(std::uint64_t counter, std::uint64_t stream = 0) const {
    const Block b = (*this)(counter, stream);
    return (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
  }

 private:
  static constexpr std::uint32_t kMulA = 0xD2511F53;
  static constexpr std::uint32_t kMulB = 0xCD9E8D57;
  static constexpr std::uint32_t kWeylA = 0x9E3779B9;
  static constexpr std::uint32_t kWeylB = 0xBB67AE85;

  std::array<std::uint32_t, 2> key_;
};

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace legsum
