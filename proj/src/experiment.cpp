#include "cuckoo/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "cuckoo/benchsuite.hpp"

namespace cuckoo::bench {

void ExperimentSpec::validate() const {
  const auto& info = benchmark_info(benchmark);
  if (dimension < info.min_dimension || (info.max_dimension != 0 && dimension > info.max_dimension)) {
    throw ContractError("benchmark '" + benchmark + "' does not support dimension " + std::to_string(dimension));
  }
  if (seeds.empty()) throw ContractError("seeds must be non-empty");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
    throw ContractError("seeds must be distinct");
  }
  if (params.max_iterations < 1) throw ContractError("iterations must be at least 1");
  params.validate();
  const bool binary_variant = params.variant.kind() == VariantKind::binary;
  if ((info.kind == BenchmarkKind::binary) != binary_variant) {
    throw ContractError(binary_variant ? "binary variant requires a binary benchmark"
                                       : "benchmark '" + benchmark + "' requires the binary variant");
  }
  if (info.kind == BenchmarkKind::multiobjective && capacity < 10) {
    throw ContractError("capacity must be at least 10");
  }
}

bool TrialRecord::same_outcome(const TrialRecord& o) const {
  // Bitwise comparison so NaN final_best on failed trials compares equal.
  auto same = [](double a, double b) { return a == b || (a != a && b != b); };
  return seed == o.seed && same(final_best, o.final_best) && evaluations == o.evaluations &&
         iterations == o.iterations && trace == o.trace && status == o.status && error == o.error &&
         best_bits == o.best_bits;
}

namespace {

void fill_from_run(TrialRecord& record, RunResult run) {
  record.final_best = run.best.fitness;
  record.evaluations = run.evaluations;
  record.trace = std::move(run.trace);
}

}  // namespace

TrialRecord run_trial(const ExperimentSpec& spec, std::uint64_t seed) {
  TrialRecord record;
  record.seed = seed;
  record.iterations = spec.params.max_iterations;
  CsParams params = spec.params;
  params.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto& info = benchmark_info(spec.benchmark);
    switch (info.kind) {
      case BenchmarkKind::continuous:
        fill_from_run(record, cs_run(make_benchmark(spec.benchmark, spec.dimension).problem(), params));
        break;
      case BenchmarkKind::binary: {
        auto result = binary_cs_run(make_binary_benchmark(spec.benchmark, spec.dimension), params);
        record.best_bits = std::move(result.best_bits);
        fill_from_run(record, std::move(result.run));
        break;
      }
      case BenchmarkKind::multiobjective: {
        const auto ref = mo_reference_point(spec.benchmark);
        mo::MoRunHooks hooks;
        hooks.on_iteration = [&](std::size_t t, const mo::ParetoArchive& archive) {
          record.trace.push_back({t, mo::archive_hypervolume(archive, ref)});
        };
        auto result = mo::mo_cs_run(make_mo_benchmark(spec.benchmark, spec.dimension), params, spec.capacity, hooks);
        record.evaluations = result.evaluations;
        record.final_best = mo::archive_hypervolume(result.archive, ref);
        break;
      }
    }
  } catch (const std::exception& e) {
    record.status = TrialStatus::failed;
    record.error = e.what();
    record.final_best = std::numeric_limits<double>::quiet_NaN();
    record.evaluations = 0;
    record.trace.clear();
    record.best_bits.reset();
  }
  record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

std::vector<TrialRecord> run_experiment_serial(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<TrialRecord> records;
  records.reserve(spec.seeds.size());
  for (std::uint64_t seed : spec.seeds) records.push_back(run_trial(spec, seed));
  return records;
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec, std::size_t jobs) {
  spec.validate();
  if (jobs < 1) throw ContractError("jobs must be at least 1");
  const auto count = static_cast<std::int64_t>(spec.seeds.size());
  std::vector<TrialRecord> records(spec.seeds.size());
  // run_trial never throws; each slot is written by exactly one thread.
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(jobs))
  for (std::int64_t i = 0; i < count; ++i) {
    records[static_cast<std::size_t>(i)] = run_trial(spec, spec.seeds[static_cast<std::size_t>(i)]);
  }
  return records;
}

Summary summarize_values(std::vector<double> values) {
  if (values.empty()) throw ContractError("summarize: no records");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  auto quantile = [&](double p) {
    const double pos = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  Summary s;
  s.count = n;
  s.min = values.front();
  s.max = values.back();
  s.median = values[(n - 1) / 2];
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  s.q1 = quantile(0.25);
  s.q3 = quantile(0.75);
  s.iqr = s.q3 - s.q1;
  return s;
}

Summary summarize(std::span<const TrialRecord> records) {
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(r.final_best);
  return summarize_values(std::move(values));
}

}  // namespace cuckoo::bench
