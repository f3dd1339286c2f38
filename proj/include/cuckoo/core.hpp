#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuckoo/rng.hpp"

namespace cuckoo {

using SolutionVector = std::vector<double>;

/// Violated precondition or type invariant.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The objective returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(SolutionVector point, double value, std::optional<std::size_t> iteration = {});

  [[nodiscard]] const SolutionVector& point() const noexcept { return point_; }
  [[nodiscard]] double value() const noexcept { return value_; }
  /// Search iteration at which the failing evaluation happened, when known.
  [[nodiscard]] std::optional<std::size_t> iteration() const noexcept { return iteration_; }

  [[nodiscard]] EvaluationError at_iteration(std::size_t t) const;

 private:
  SolutionVector point_;
  double value_;
  std::optional<std::size_t> iteration_;
};

/// Axis-aligned box; lower[d] < upper[d] for every d.
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper);
  /// The same interval in every one of `dimension` coordinates.
  static Bounds uniform(std::size_t dimension, double lower, double upper);

  [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
  [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
  [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }
  [[nodiscard]] double range(std::size_t d) const { return upper_.at(d) - lower_.at(d); }
  [[nodiscard]] bool contains(std::span<const double> x) const;

  friend bool operator==(const Bounds&, const Bounds&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

using Objective = std::function<double(std::span<const double>)>;

/// Box-bounded minimization problem. Maximize g by passing -g.
struct ObjectiveProblem {
  ObjectiveProblem(Bounds bounds, Objective objective);

  [[nodiscard]] std::size_t dimension() const noexcept { return bounds.dimension(); }
  /// f(x); throws EvaluationError if the result is not finite.
  [[nodiscard]] double evaluate(std::span<const double> x) const;

  Bounds bounds;
  Objective objective;
};

struct Nest {
  SolutionVector position;
  double fitness = 0.0;

  friend bool operator==(const Nest&, const Nest&) = default;
};

struct Population {
  std::vector<Nest> nests;
  std::size_t best = 0;

  [[nodiscard]] std::size_t size() const noexcept { return nests.size(); }
  /// Recompute `best` with ties going to the lowest index.
  void refresh_best();

  friend bool operator==(const Population&, const Population&) = default;
};

/// Index of the minimal-fitness nest, lowest index on ties.
std::size_t best_index(std::span<const Nest> nests);

/// n nests drawn uniformly in the box, coordinate by coordinate.
Population init_population(const ObjectiveProblem& problem, std::size_t n, RngStream& rng);

/// Coordinate-wise projection into the box.
SolutionVector clamp(const Bounds& bounds, SolutionVector x);

/// First two entries of a uniformly random permutation of {0..n-1}.
std::pair<std::size_t, std::size_t> pick_distinct_pair(std::size_t n, RngStream& rng);

const Nest& best_of(const Population& population);

}  // namespace cuckoo
