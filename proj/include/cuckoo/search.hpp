#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cuckoo/core.hpp"
#include "cuckoo/levy.hpp"
#include "cuckoo/rng.hpp"
#include "cuckoo/variants.hpp"

namespace cuckoo {

struct CsParams {
  std::size_t n = 25;
  double pa = 0.25;
  /// Lévy step scale as a fraction of each coordinate's bound range.
  double alpha = 0.01;
  double beta = 1.0;
  double lambda = kDefaultLevyLambda;
  std::size_t max_iterations = 1000;
  std::uint64_t seed = 0;
  VariantConfig variant;

  void validate() const;

  friend bool operator==(const CsParams&, const CsParams&) = default;
};

struct TracePoint {
  std::size_t iteration;
  double best;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// Who supplied the epsilon and s draws of the discovery walk.
struct DrawAudit {
  std::uint64_t uniform_epsilon = 0;
  std::uint64_t uniform_step = 0;
  std::uint64_t chaotic_epsilon = 0;
  std::uint64_t chaotic_step = 0;

  friend bool operator==(const DrawAudit&, const DrawAudit&) = default;
};

/// Source of the per-entry epsilon and s draws in the discovery walk:
/// the run's RngStream by default, a chaotic orbit in chaotic mode.
class WalkSource {
 public:
  WalkSource() = default;
  explicit WalkSource(ChaoticSequence chaos) : chaos_(std::move(chaos)) {}

  double epsilon(RngStream& rng);
  double step(RngStream& rng);

  [[nodiscard]] const DrawAudit& audit() const noexcept { return audit_; }
  [[nodiscard]] bool chaotic() const noexcept { return chaos_.has_value(); }

  friend bool operator==(const WalkSource&, const WalkSource&) = default;

 private:
  std::optional<ChaoticSequence> chaos_;
  DrawAudit audit_;
};

struct SearchState {
  Population population;
  std::size_t iteration = 0;
  std::vector<TracePoint> best_trace;
  RngStream rng{0};
  WalkSource walk;

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

struct RunResult {
  Nest best;
  std::size_t evaluations = 0;
  std::vector<TracePoint> trace;
  CsParams params_echo;
  DrawAudit audit;
};

/// clamp(x + alpha * range ⊗ step), the deterministic half of the Lévy move.
SolutionVector apply_levy_step(std::span<const double> x, std::span<const double> step, double alpha,
                               const Bounds& bounds);

/// Lévy-flight move: draws one Mantegna vector and applies it.
SolutionVector levy_flight_move(std::span<const double> x, const CsParams& params, const Bounds& bounds,
                                RngStream& rng);

/// Partners (j, k) for the walk of nest i: a random distinct pair, re-drawn
/// while either equals i when n >= 3.
std::pair<std::size_t, std::size_t> pick_walk_partners(std::size_t n, std::size_t i, RngStream& rng);

/// Discovery walk x_i + beta * s ⊗ H(pa - eps) ⊗ (x_j - x_k), clamped.
/// Draw order: partners, then (eps_d, s_d) for each coordinate d.
SolutionVector discovery_move(const Population& population, std::size_t i, const CsParams& params,
                              const Bounds& bounds, RngStream& rng, WalkSource& walk);
SolutionVector discovery_move(const Population& population, std::size_t i, const CsParams& params,
                              const Bounds& bounds, RngStream& rng);

/// Candidate replaces current only if strictly better.
Nest greedy_select(const Nest& current, SolutionVector candidate, const ObjectiveProblem& problem);

/// Fresh state: initial population drawn from a stream seeded with params.seed.
SearchState make_initial_state(const ObjectiveProblem& problem, const CsParams& params);

/// One generation: Lévy phase (candidate from nest i challenges a random
/// nest m) followed by the discovery phase (nest i challenged in place).
/// Consumes exactly 2n evaluations.
SearchState cs_step(SearchState state, const ObjectiveProblem& problem, const CsParams& params);

/// Parameters in force at iteration t; differs from `params` only for the
/// self-adaptive variant.
CsParams effective_params(const CsParams& params, std::size_t t);

/// Full run: n + 2 n max_iterations evaluations. Binary variants go through
/// binary_cs_run instead.
RunResult cs_run(const ObjectiveProblem& problem, const CsParams& params);

}  // namespace cuckoo
