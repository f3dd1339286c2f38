#include "cuckoo/multiobjective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace cuckoo::mo {

MultiObjectiveProblem::MultiObjectiveProblem(Bounds b, std::size_t k,
                                             std::function<ObjectiveVector(std::span<const double>)> f)
    : bounds(std::move(b)), objectives(k), function(std::move(f)) {
  if (objectives < 2) throw ContractError("multiobjective problem: need at least two objectives");
  if (!function) throw ContractError("multiobjective problem: objective is empty");
}

ObjectiveVector MultiObjectiveProblem::evaluate(std::span<const double> x) const {
  ObjectiveVector values = function(x);
  if (values.size() != objectives) throw ContractError("multiobjective problem: wrong objective count");
  for (double v : values) {
    if (!std::isfinite(v)) throw EvaluationError(SolutionVector(x.begin(), x.end()), v);
  }
  return values;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ContractError("dominates: objective counts differ");
  bool strictly = false;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] > b[m]) return false;
    if (a[m] < b[m]) strictly = true;
  }
  return strictly;
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw ContractError("archive capacity must be positive");
}

bool ParetoArchive::insert(ArchiveEntry candidate) {
  for (const auto& e : entries_) {
    if (e.objectives == candidate.objectives || dominates(e.objectives, candidate.objectives)) return false;
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(candidate.objectives, e.objectives); });
  entries_.push_back(std::move(candidate));
  if (entries_.size() > capacity_) evict_most_crowded();
  return true;
}

void ParetoArchive::evict_most_crowded() {
  const std::size_t count = entries_.size();
  const std::size_t k = entries_.front().objectives.size();
  std::vector<double> lo(k, std::numeric_limits<double>::infinity());
  std::vector<double> hi(k, -std::numeric_limits<double>::infinity());
  for (const auto& e : entries_) {
    for (std::size_t m = 0; m < k; ++m) {
      lo[m] = std::min(lo[m], e.objectives[m]);
      hi[m] = std::max(hi[m], e.objectives[m]);
    }
  }
  std::vector<bool> protected_entry(count, false);
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < count; ++i) {
      if (entries_[i].objectives[m] == lo[m]) {
        protected_entry[i] = true;
        break;
      }
    }
  }

  std::size_t victim = count;
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    if (protected_entry[i]) continue;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      double dist = 0.0;
      for (std::size_t m = 0; m < k; ++m) {
        const double span = hi[m] - lo[m];
        const double diff = span > 0.0 ? (entries_[i].objectives[m] - entries_[j].objectives[m]) / span : 0.0;
        dist += diff * diff;
      }
      nearest = std::min(nearest, dist);
    }
    if (victim == count || nearest < smallest) {
      smallest = nearest;
      victim = i;
    }
  }
  // Every entry protected only when count <= K; drop the newest then.
  if (victim == count) victim = count - 1;
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(victim));
}

std::vector<ObjectiveVector> ParetoArchive::front() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.objectives);
  return out;
}

ParetoArchive archive_insert(ParetoArchive archive, ArchiveEntry candidate) {
  archive.insert(std::move(candidate));
  return archive;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates(points[j], points[i]);
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points) {
  std::vector<ObjectiveVector> out;
  for (std::size_t i : nondominated_indices(points)) out.push_back(points[i]);
  return out;
}

double hypervolume_2d(std::span<const ObjectiveVector> front, std::span<const double> ref) {
  if (ref.size() != 2) throw ContractError("hypervolume_2d: reference point must be 2-D");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(front.size());
  for (const auto& p : front) {
    if (p.size() != 2) throw ContractError("hypervolume_2d: front points must be 2-D");
    if (!dominates(p, ref)) throw ContractError("hypervolume_2d: front point does not dominate the reference");
    pts.emplace_back(p[0], p[1]);
  }
  std::sort(pts.begin(), pts.end());
  // Staircase of the non-dominated points: increasing f1, strictly
  // decreasing f2. Dominated points are dropped so they cannot perturb the sum.
  std::vector<std::pair<double, double>> stairs;
  for (const auto& p : pts) {
    if (stairs.empty() || p.second < stairs.back().second) stairs.push_back(p);
  }
  double area = 0.0;
  for (std::size_t i = 0; i < stairs.size(); ++i) {
    const double next_f1 = i + 1 < stairs.size() ? stairs[i + 1].first : ref[0];
    area += (next_f1 - stairs[i].first) * (ref[1] - stairs[i].second);
  }
  return area;
}

double archive_hypervolume(const ParetoArchive& archive, std::span<const double> ref) {
  std::vector<ObjectiveVector> inside;
  for (const auto& e : archive.entries()) {
    if (dominates(e.objectives, ref)) inside.push_back(e.objectives);
  }
  return hypervolume_2d(inside, ref);
}

namespace {

struct MoNest {
  SolutionVector position;
  ObjectiveVector objectives;
};

// Dominance acceptance; the coin is drawn only for incomparable pairs.
bool accept(const ObjectiveVector& candidate, const ObjectiveVector& incumbent, RngStream& rng) {
  if (dominates(candidate, incumbent)) return true;
  if (dominates(incumbent, candidate) || candidate == incumbent) return false;
  return rng.uniform01() < 0.5;
}

}  // namespace

MoRunResult mo_cs_run(const MultiObjectiveProblem& problem, const CsParams& params, std::size_t capacity,
                      const MoRunHooks& hooks) {
  params.validate();
  if (params.variant.kind() == VariantKind::binary) throw ContractError("mo_cs_run: binary variant unsupported");
  if (capacity < 10) throw ContractError("mo_cs_run: capacity must be at least 10");

  MoRunResult result{ParetoArchive(capacity), 0};
  RngStream rng(params.seed);
  WalkSource walk;
  if (const auto* c = std::get_if<ChaoticVariant>(&params.variant.mechanism)) {
    walk = WalkSource(ChaoticSequence(c->map, c->seed));
  }
  const Bounds& bounds = problem.bounds;
  std::size_t iteration = 0;

  auto evaluate = [&](const SolutionVector& x) {
    ++result.evaluations;
    try {
      ObjectiveVector f = problem.evaluate(x);
      result.archive.insert(ArchiveEntry{x, f});
      if (hooks.on_offer) hooks.on_offer(result.archive);
      return f;
    } catch (const EvaluationError& e) {
      throw e.at_iteration(iteration);
    }
  };

  // Population holds positions for the move operators; objectives alongside.
  Population positions;
  std::vector<MoNest> nests;
  for (std::size_t i = 0; i < params.n; ++i) {
    SolutionVector x(bounds.dimension());
    for (std::size_t d = 0; d < x.size(); ++d) {
      x[d] = std::min(rng.uniform(bounds.lower()[d], bounds.upper()[d]), bounds.upper()[d]);
    }
    ObjectiveVector f = evaluate(x);
    positions.nests.push_back(Nest{x, 0.0});
    nests.push_back(MoNest{std::move(x), std::move(f)});
  }

  if (hooks.on_iteration) hooks.on_iteration(0, result.archive);

  for (std::size_t t = 0; t < params.max_iterations; ++t) {
    iteration = t;
    const CsParams now = effective_params(params, t);
    for (std::size_t i = 0; i < params.n; ++i) {
      auto candidate = levy_flight_move(nests[i].position, now, bounds, rng);
      const std::size_t m = rng.uniform_index(params.n);
      ObjectiveVector f = evaluate(candidate);
      if (accept(f, nests[m].objectives, rng)) {
        positions.nests[m].position = candidate;
        nests[m] = MoNest{std::move(candidate), std::move(f)};
      }
    }
    for (std::size_t i = 0; i < params.n; ++i) {
      auto candidate = discovery_move(positions, i, now, bounds, rng, walk);
      ObjectiveVector f = evaluate(candidate);
      if (accept(f, nests[i].objectives, rng)) {
        positions.nests[i].position = candidate;
        nests[i] = MoNest{std::move(candidate), std::move(f)};
      }
    }
    if (hooks.on_iteration) hooks.on_iteration(t + 1, result.archive);
  }
  return result;
}

}  // namespace cuckoo::mo
