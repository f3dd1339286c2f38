#include "cuckoo/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cuckoo {

namespace {

std::string describe_failure(const SolutionVector& x, double value,
                             std::optional<std::size_t> iteration) {
  std::ostringstream os;
  os.precision(17);
  os << "objective returned non-finite value " << value << " at x = (";
  for (std::size_t d = 0; d < x.size(); ++d) os << (d ? ", " : "") << x[d];
  os << ")";
  if (iteration) os << " during iteration " << *iteration;
  return os.str();
}

}  // namespace

EvaluationError::EvaluationError(SolutionVector point, double value,
                                 std::optional<std::size_t> iteration)
    : std::runtime_error(describe_failure(point, value, iteration)),
      point_(std::move(point)),
      value_(value),
      iteration_(iteration) {}

EvaluationError EvaluationError::at_iteration(std::size_t t) const {
  return EvaluationError(point_, value_, t);
}

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) throw ContractError("bounds: lower and upper differ in length");
  if (lower_.empty()) throw ContractError("bounds: dimension must be positive");
  for (std::size_t d = 0; d < lower_.size(); ++d) {
    if (!(lower_[d] < upper_[d]) || !std::isfinite(lower_[d]) || !std::isfinite(upper_[d])) {
      throw ContractError("bounds: need finite lower < upper in dimension " + std::to_string(d));
    }
  }
}

Bounds Bounds::uniform(std::size_t dimension, double lower, double upper) {
  return Bounds(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != dimension()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!(x[d] >= lower_[d] && x[d] <= upper_[d])) return false;
  }
  return true;
}

ObjectiveProblem::ObjectiveProblem(Bounds b, Objective f) : bounds(std::move(b)), objective(std::move(f)) {
  if (!objective) throw ContractError("objective problem: objective is empty");
}

double ObjectiveProblem::evaluate(std::span<const double> x) const {
  const double value = objective(x);
  if (!std::isfinite(value)) throw EvaluationError(SolutionVector(x.begin(), x.end()), value);
  return value;
}

void Population::refresh_best() { best = best_index(nests); }

std::size_t best_index(std::span<const Nest> nests) {
  if (nests.empty()) throw ContractError("best_index: empty population");
  std::size_t best = 0;
  for (std::size_t i = 1; i < nests.size(); ++i) {
    if (nests[i].fitness < nests[best].fitness) best = i;
  }
  return best;
}

Population init_population(const ObjectiveProblem& problem, std::size_t n, RngStream& rng) {
  if (n < 2) throw ContractError("init_population: need n >= 2");
  const Bounds& b = problem.bounds;
  Population pop;
  pop.nests.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Nest nest;
    nest.position.resize(b.dimension());
    for (std::size_t d = 0; d < b.dimension(); ++d) {
      // uniform() can round up to upper; keep the box closed.
      nest.position[d] = std::min(rng.uniform(b.lower()[d], b.upper()[d]), b.upper()[d]);
    }
    nest.fitness = problem.evaluate(nest.position);
    pop.nests.push_back(std::move(nest));
  }
  pop.refresh_best();
  return pop;
}

SolutionVector clamp(const Bounds& bounds, SolutionVector x) {
  if (x.size() != bounds.dimension()) throw ContractError("clamp: length mismatch");
  for (std::size_t d = 0; d < x.size(); ++d) {
    x[d] = std::clamp(x[d], bounds.lower()[d], bounds.upper()[d]);
  }
  return x;
}

std::pair<std::size_t, std::size_t> pick_distinct_pair(std::size_t n, RngStream& rng) {
  if (n < 2) throw ContractError("pick_distinct_pair: need n >= 2");
  // Two steps of Fisher-Yates on the identity permutation: position 0 swaps
  // with a uniform slot in [0, n), position 1 with a uniform slot in [1, n).
  const std::size_t first = rng.uniform_index(n);
  const std::size_t slot = 1 + rng.uniform_index(n - 1);
  // After the first swap, slot `first` holds 0 and every other slot holds
  // its own index (slot 0 now holds `first`).
  std::size_t second = slot;
  if (slot == first) second = 0;
  return {first, second};
}

const Nest& best_of(const Population& population) {
  if (population.nests.empty()) throw ContractError("best_of: empty population");
  return population.nests[population.best];
}

}  // namespace cuckoo
