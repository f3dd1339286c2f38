#include "cuckoo/variants.hpp"

#include <cmath>

#include "cuckoo/core.hpp"

namespace cuckoo {

namespace {

constexpr double kGoldenFraction = 0.6180339887498949;

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw ContractError(std::string(what) + ": state must be within [0, 1]");
}

}  // namespace

double chaotic_next(ChaoticMap map, double x) {
  require_unit(x, "chaotic_next");
  switch (map) {
    case ChaoticMap::logistic:
      return 4.0 * x * (1.0 - x);
    case ChaoticMap::tent:
      return x < 0.5 ? 2.0 * x : 2.0 * (1.0 - x);
  }
  return x;
}

bool is_degenerate_state(ChaoticMap map, double x) noexcept {
  if (x <= 0.0 || x >= 1.0 || x == 0.25 || x == 0.5 || x == 0.75) return true;
  return map == ChaoticMap::tent && x == 2.0 / 3.0;
}

ChaoticDraw chaotic_uniform(double state, ChaoticMap map) {
  if (is_degenerate_state(map, state)) {
    throw ContractError("chaotic_uniform: state must be in (0, 1) and off the degenerate orbits");
  }
  return {state, chaotic_next(map, state)};
}

ChaoticSequence::ChaoticSequence(ChaoticMap map, double seed) : map_(map), seed_(seed), state_(seed) {
  if (is_degenerate_state(map, seed)) {
    throw ContractError("chaotic seed must be in (0, 1) and not one of 0.25, 0.5, 0.75 or a fixed point");
  }
}

double ChaoticSequence::next() {
  const auto [draw, next] = chaotic_uniform(state_, map_);
  state_ = next;
  while (is_degenerate_state(map_, state_)) {
    ++restarts_;
    const double shifted = seed_ + static_cast<double>(restarts_) * kGoldenFraction;
    state_ = shifted - std::floor(shifted);
  }
  return draw;
}

void AdaptiveSchedule::validate() const {
  if (!(pa_min >= 0.0 && pa_max <= 1.0 && pa_min <= pa_max)) {
    throw ContractError("schedule: need 0 <= pa_min <= pa_max <= 1");
  }
  if (!(alpha_min > 0.0 && alpha_min <= alpha_max && std::isfinite(alpha_max))) {
    throw ContractError("schedule: need 0 < alpha_min <= alpha_max");
  }
}

AdaptiveParams adaptive_params(std::size_t t, std::size_t t_max, const AdaptiveSchedule& s) {
  if (t_max < 1) throw ContractError("adaptive_params: t_max must be at least 1");
  if (t > t_max) throw ContractError("adaptive_params: t exceeds t_max");
  if (t == 0) return {s.pa_max, s.alpha_max};
  if (t == t_max) return {s.pa_min, s.alpha_min};
  const double frac = static_cast<double>(t) / static_cast<double>(t_max);
  return {s.pa_max - frac * (s.pa_max - s.pa_min), s.alpha_max * std::pow(s.alpha_min / s.alpha_max, frac)};
}

double transfer_sigmoid(double v) noexcept { return 1.0 / (1.0 + std::exp(-v)); }

double transfer(TransferKind kind, double v) noexcept {
  switch (kind) {
    case TransferKind::sigmoid:
      return transfer_sigmoid(v);
  }
  return transfer_sigmoid(v);
}

std::size_t BitVector::count() const noexcept {
  std::size_t ones = 0;
  for (bool b : bits_) ones += b ? 1 : 0;
  return ones;
}

std::string BitVector::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

BitVector binarize(std::span<const double> x, RngStream& rng, TransferKind kind) {
  BitVector bits(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    bits.set(d, rng.uniform01() < transfer(kind, x[d]));
  }
  return bits;
}

VariantKind VariantConfig::kind() const noexcept { return static_cast<VariantKind>(mechanism.index()); }

void VariantConfig::validate() const {
  if (const auto* c = std::get_if<ChaoticVariant>(&mechanism)) {
    ChaoticSequence check(c->map, c->seed);
  } else if (const auto* a = std::get_if<SelfAdaptiveVariant>(&mechanism)) {
    a->schedule.validate();
  }
}

std::string_view to_string(VariantKind kind) noexcept {
  switch (kind) {
    case VariantKind::standard: return "standard";
    case VariantKind::chaotic: return "chaotic";
    case VariantKind::self_adaptive: return "self_adaptive";
    case VariantKind::binary: return "binary";
  }
  return "standard";
}

std::string_view to_string(ChaoticMap map) noexcept {
  return map == ChaoticMap::logistic ? "logistic" : "tent";
}

std::string_view to_string(TransferKind) noexcept { return "sigmoid"; }

VariantKind parse_variant_kind(std::string_view name) {
  for (auto k : {VariantKind::standard, VariantKind::chaotic, VariantKind::self_adaptive, VariantKind::binary}) {
    if (to_string(k) == name) return k;
  }
  throw ContractError("unknown variant kind '" + std::string(name) + "'");
}

ChaoticMap parse_chaotic_map(std::string_view name) {
  if (name == "logistic") return ChaoticMap::logistic;
  if (name == "tent") return ChaoticMap::tent;
  throw ContractError("unknown chaotic map '" + std::string(name) + "'");
}

TransferKind parse_transfer_kind(std::string_view name) {
  if (name == "sigmoid") return TransferKind::sigmoid;
  throw ContractError("unknown transfer function '" + std::string(name) + "'");
}

}  // namespace cuckoo
