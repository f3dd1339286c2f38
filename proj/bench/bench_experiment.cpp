// Wall-clock comparison of the serial and OpenMP experiment runners.
//
//   bench_experiment [benchmark] [dimension] [iterations] [seeds] [jobs]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cuckoo/experiment.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  cuckoo::bench::ExperimentSpec spec;
  spec.benchmark = argc > 1 ? argv[1] : "rastrigin";
  spec.dimension = argc > 2 ? std::stoul(argv[2]) : 10;
  spec.params.max_iterations = argc > 3 ? std::stoul(argv[3]) : 500;
  const std::size_t seeds = argc > 4 ? std::stoul(argv[4]) : 32;
  const std::size_t jobs = argc > 5 ? std::stoul(argv[5]) : static_cast<std::size_t>(omp_get_max_threads());
  for (std::size_t s = 1; s <= seeds; ++s) spec.seeds.push_back(s);

  std::vector<cuckoo::bench::TrialRecord> serial;
  std::vector<cuckoo::bench::TrialRecord> parallel;
  const double t_serial = seconds([&] { serial = cuckoo::bench::run_experiment_serial(spec); });
  const double t_parallel = seconds([&] { parallel = cuckoo::bench::run_experiment(spec, jobs); });

  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) identical = serial[i].same_outcome(parallel[i]);

  std::cout << spec.benchmark << " D=" << spec.dimension << " iterations=" << spec.params.max_iterations
            << " seeds=" << seeds << "\n";
  std::cout << "serial    " << t_serial << " s\n";
  std::cout << "parallel  " << t_parallel << " s  (" << jobs << " threads, speedup " << t_serial / t_parallel
            << "x)\n";
  std::cout << "records identical: " << (identical ? "yes" : "NO") << "\n";
  return identical ? EXIT_SUCCESS : EXIT_FAILURE;
}
