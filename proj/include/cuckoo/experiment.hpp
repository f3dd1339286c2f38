#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuckoo/search.hpp"
#include "cuckoo/variants.hpp"

namespace cuckoo::bench {

inline constexpr std::size_t kDefaultArchiveCapacity = 50;

/// One benchmark, one parameter set, many seeds. params.seed is ignored;
/// each trial uses its own entry of `seeds`.
struct ExperimentSpec {
  std::string benchmark;
  std::size_t dimension = 0;
  CsParams params;
  std::vector<std::uint64_t> seeds;
  std::size_t capacity = kDefaultArchiveCapacity;  ///< multiobjective only
  std::string output_path;

  /// Names resolve, dimension fits, seeds non-empty and distinct, params
  /// valid, variant compatible with the benchmark kind.
  void validate() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

enum class TrialStatus { ok, failed };

/// Outcome of one seed. For multiobjective benchmarks `final_best` and the
/// trace hold the archive hypervolume instead of a best fitness.
struct TrialRecord {
  std::uint64_t seed = 0;
  double final_best = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  double wall_seconds = 0.0;
  std::vector<TracePoint> trace;
  TrialStatus status = TrialStatus::ok;
  std::string error;
  std::optional<BitVector> best_bits;

  /// Equality ignoring wall time.
  [[nodiscard]] bool same_outcome(const TrialRecord& other) const;
};

/// Run one seed; evaluation and contract failures become a failed record.
TrialRecord run_trial(const ExperimentSpec& spec, std::uint64_t seed);

/// Reference path: trials one after another in seed order.
std::vector<TrialRecord> run_experiment_serial(const ExperimentSpec& spec);

/// Trials spread over `jobs` OpenMP threads; records come back in seed order
/// and match run_experiment_serial exactly (wall time aside).
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec, std::size_t jobs = 1);

struct Summary {
  std::size_t count = 0;
  double min = 0.0;
  double median = 0.0;  ///< lower-middle element for even counts
  double mean = 0.0;
  double max = 0.0;
  double q1 = 0.0;  ///< linear-interpolated quartiles
  double q3 = 0.0;
  double iqr = 0.0;
};

Summary summarize(std::span<const TrialRecord> records);
Summary summarize_values(std::vector<double> values);

}  // namespace cuckoo::bench
