#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cuckoo/rng.hpp"

namespace cuckoo {

// ---------------------------------------------------------------------------
// Chaotic randomization

enum class ChaoticMap { logistic, tent };

/// logistic: 4x(1-x); tent: 2x for x < 0.5, else 2(1-x). Requires x in [0, 1].
double chaotic_next(ChaoticMap map, double x);

struct ChaoticDraw {
  double draw;
  double next_state;
};

/// Emit the current state as a draw and advance the orbit. Rejects states
/// on the boundary or on a degenerate orbit (see `is_degenerate_state`).
ChaoticDraw chaotic_uniform(double state, ChaoticMap map);

/// 0, 1, 0.25, 0.5, 0.75, and the map's interior fixed point (3/4 logistic,
/// 2/3 tent). Orbits through these collapse to a fixed point.
bool is_degenerate_state(ChaoticMap map, double x) noexcept;

inline constexpr double kDefaultChaoticSeed = 0.7;

/// Stateful chaotic draw source used in place of uniform draws.
///
/// Finite-precision orbits eventually land on a degenerate state (the tent
/// map loses one mantissa bit per step, so its orbit reaches 0 within ~55
/// iterates). When that happens the orbit restarts from
/// frac(seed + r * 0.618...), r = restart count, which is deterministic.
class ChaoticSequence {
 public:
  ChaoticSequence(ChaoticMap map, double seed);

  double next();

  [[nodiscard]] ChaoticMap map() const noexcept { return map_; }
  [[nodiscard]] double state() const noexcept { return state_; }
  [[nodiscard]] std::uint64_t restarts() const noexcept { return restarts_; }

  friend bool operator==(const ChaoticSequence&, const ChaoticSequence&) = default;

 private:
  ChaoticMap map_;
  double seed_;
  double state_;
  std::uint64_t restarts_ = 0;
};

// ---------------------------------------------------------------------------
// Self-adaptive parameters

struct AdaptiveSchedule {
  double pa_max = 0.5;
  double pa_min = 0.05;
  double alpha_max = 0.1;
  double alpha_min = 0.001;

  void validate() const;

  friend bool operator==(const AdaptiveSchedule&, const AdaptiveSchedule&) = default;
};

struct AdaptiveParams {
  double pa;
  double alpha;
};

/// Linear p_a and geometric alpha between the schedule endpoints; exact at
/// t = 0 and t = t_max.
AdaptiveParams adaptive_params(std::size_t t, std::size_t t_max, const AdaptiveSchedule& schedule);

// ---------------------------------------------------------------------------
// Binary representation

enum class TransferKind { sigmoid };

double transfer_sigmoid(double v) noexcept;
double transfer(TransferKind kind, double v) noexcept;

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length, bool value = false) : bits_(length, value) {}
  explicit BitVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool operator[](std::size_t d) const { return bits_[d]; }
  void set(std::size_t d, bool value) { bits_.at(d) = value; }
  [[nodiscard]] std::size_t count() const noexcept;
  /// '0'/'1' characters, coordinate 0 first.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<bool> bits_;
};

/// bit d = 1 iff a uniform draw < transfer(x[d]); one draw per coordinate.
BitVector binarize(std::span<const double> x, RngStream& rng, TransferKind kind = TransferKind::sigmoid);

// ---------------------------------------------------------------------------
// Variant selection

enum class VariantKind { standard, chaotic, self_adaptive, binary };

struct StandardVariant {
  friend bool operator==(const StandardVariant&, const StandardVariant&) = default;
};

struct ChaoticVariant {
  ChaoticMap map = ChaoticMap::logistic;
  double seed = kDefaultChaoticSeed;
  friend bool operator==(const ChaoticVariant&, const ChaoticVariant&) = default;
};

struct SelfAdaptiveVariant {
  AdaptiveSchedule schedule;
  friend bool operator==(const SelfAdaptiveVariant&, const SelfAdaptiveVariant&) = default;
};

struct BinaryVariant {
  TransferKind transfer = TransferKind::sigmoid;
  friend bool operator==(const BinaryVariant&, const BinaryVariant&) = default;
};

/// Exactly one mechanism is active; its options travel with it.
struct VariantConfig {
  std::variant<StandardVariant, ChaoticVariant, SelfAdaptiveVariant, BinaryVariant> mechanism;

  [[nodiscard]] VariantKind kind() const noexcept;
  void validate() const;

  friend bool operator==(const VariantConfig&, const VariantConfig&) = default;
};

std::string_view to_string(VariantKind kind) noexcept;
std::string_view to_string(ChaoticMap map) noexcept;
std::string_view to_string(TransferKind kind) noexcept;
VariantKind parse_variant_kind(std::string_view name);
ChaoticMap parse_chaotic_map(std::string_view name);
TransferKind parse_transfer_kind(std::string_view name);

}  // namespace cuckoo
