#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuckoo/binary.hpp"
#include "cuckoo/core.hpp"
#include "cuckoo/multiobjective.hpp"

namespace cuckoo::bench {

/// Unknown benchmark name.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class BenchmarkKind { continuous, multiobjective, binary };

struct BenchmarkInfo {
  std::string name;
  BenchmarkKind kind;
  std::size_t min_dimension;
  std::size_t max_dimension;  ///< 0 means unbounded.
  std::string description;
};

/// All registered names, in listing order.
const std::vector<BenchmarkInfo>& benchmark_catalog();
const BenchmarkInfo& benchmark_info(std::string_view name);

/// A single-objective test function instantiated at a dimension.
struct BenchmarkFunction {
  std::string name;
  std::size_t dimension;
  Bounds bounds;
  double known_optimum;
  std::optional<SolutionVector> optimum_position;

  [[nodiscard]] double operator()(std::span<const double> x) const;
  [[nodiscard]] ObjectiveProblem problem() const;
};

BenchmarkFunction make_benchmark(std::string_view name, std::size_t dimension);

double sphere(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);

/// Evaluate a continuous benchmark by name; throws LookupError.
double eval_benchmark(std::string_view name, std::span<const double> x);

/// Schaffer N.1: (x^2, (x - 2)^2) over x in [-10, 10].
mo::ObjectiveVector schaffer(std::span<const double> x);
mo::ObjectiveVector eval_mo_benchmark(std::string_view name, std::span<const double> x);
mo::MultiObjectiveProblem make_mo_benchmark(std::string_view name, std::size_t dimension);
/// Hypervolume reference point used when reporting a multiobjective run.
std::vector<double> mo_reference_point(std::string_view name);

/// OneMax as minimization: D - popcount(bits).
double onemax(const BitVector& bits);
BinaryProblem make_binary_benchmark(std::string_view name, std::size_t dimension);

}  // namespace cuckoo::bench
