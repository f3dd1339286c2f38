#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace cuckoo {

/// Counter-based random stream built on Philox4x32-10.
///
/// The 64-bit seed is the Philox key. The 128-bit counter is split into a
/// 64-bit block index and a 64-bit substream label, so `derive()` yields
/// streams that never share a counter with their parent. Every stream is a
/// plain value: copying it forks an identical future sequence.
///
/// All derived draws (uniform, index, normal) are defined in terms of
/// `next_u64()` with fixed arithmetic, so sequences are identical on every
/// platform with IEEE-754 doubles.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t substream = 0) noexcept;

  /// Independent child stream keyed by a label.
  [[nodiscard]] RngStream derive(std::string_view label) const noexcept;
  [[nodiscard]] RngStream derive(std::uint64_t label) const noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept;
  /// Unbiased integer in [0, n); n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) noexcept;
  /// Standard normal via Box-Muller; consumes exactly two u64 draws.
  double normal() noexcept;

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t substream() const noexcept { return substream_; }
  /// Number of u64 draws consumed so far.
  [[nodiscard]] std::uint64_t draws() const noexcept { return draws_; }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t substream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  unsigned buffered_ = 0;
  std::uint64_t draws_ = 0;
};

/// Raw Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// 64-bit FNV-1a, used for substream labels.
std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace cuckoo
