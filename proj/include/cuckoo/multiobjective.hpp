#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cuckoo/core.hpp"
#include "cuckoo/search.hpp"

namespace cuckoo::mo {

/// K >= 2 objective values, all minimized.
using ObjectiveVector = std::vector<double>;

struct MultiObjectiveProblem {
  MultiObjectiveProblem(Bounds bounds, std::size_t objectives,
                        std::function<ObjectiveVector(std::span<const double>)> evaluate);

  [[nodiscard]] std::size_t dimension() const noexcept { return bounds.dimension(); }
  /// Throws EvaluationError on a non-finite component, ContractError on a
  /// wrong-length result.
  [[nodiscard]] ObjectiveVector evaluate(std::span<const double> x) const;

  Bounds bounds;
  std::size_t objectives;
  std::function<ObjectiveVector(std::span<const double>)> function;
};

/// a <= b everywhere and a < b somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);

struct ArchiveEntry {
  SolutionVector position;
  ObjectiveVector objectives;

  friend bool operator==(const ArchiveEntry&, const ArchiveEntry&) = default;
};

/// Bounded set of mutually non-dominated entries.
///
/// Insertion rejects a candidate that is dominated by, or equal in objective
/// space to, an existing entry; otherwise it evicts everything the candidate
/// dominates. Over capacity, the entry with the smallest nearest-neighbour
/// distance in range-normalized objective space is dropped. Entries holding
/// the minimum of some objective are never dropped by crowding.
class ParetoArchive {
 public:
  explicit ParetoArchive(std::size_t capacity);

  /// True if the candidate entered the archive.
  bool insert(ArchiveEntry candidate);

  [[nodiscard]] const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
  [[nodiscard]] std::vector<ObjectiveVector> front() const;

  friend bool operator==(const ParetoArchive&, const ParetoArchive&) = default;

 private:
  void evict_most_crowded();

  std::size_t capacity_;
  std::vector<ArchiveEntry> entries_;
};

ParetoArchive archive_insert(ParetoArchive archive, ArchiveEntry candidate);

/// Indices of the points no other point dominates, in input order.
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points);
std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points);

/// Area dominated by a bi-objective front up to `ref`. Every point must
/// dominate ref; dominated points in the front contribute nothing extra.
double hypervolume_2d(std::span<const ObjectiveVector> front, std::span<const double> ref);

/// Hypervolume of the archive entries that dominate `ref`; the rest lie
/// outside the measured box and are skipped.
double archive_hypervolume(const ParetoArchive& archive, std::span<const double> ref);

struct MoRunHooks {
  /// After every archive offer, with the archive as it now stands.
  std::function<void(const ParetoArchive&)> on_offer;
  /// After initialization (t = 0) and after each completed iteration t.
  std::function<void(std::size_t, const ParetoArchive&)> on_iteration;
};

struct MoRunResult {
  ParetoArchive archive;
  std::size_t evaluations = 0;
};

/// Cuckoo search with dominance acceptance: a candidate replaces the
/// incumbent if it dominates it, or with probability 1/2 if the two are
/// incomparable. Every evaluated point is offered to the archive.
MoRunResult mo_cs_run(const MultiObjectiveProblem& problem, const CsParams& params, std::size_t capacity,
                      const MoRunHooks& hooks = {});

}  // namespace cuckoo::mo
