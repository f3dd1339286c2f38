#include "cuckoo/benchsuite.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cuckoo::bench {

const std::vector<BenchmarkInfo>& benchmark_catalog() {
  static const std::vector<BenchmarkInfo> catalog = {
      {"sphere", BenchmarkKind::continuous, 1, 0, "sum x_d^2 on [-5.12, 5.12]^D"},
      {"rosenbrock", BenchmarkKind::continuous, 2, 0, "sum 100 (x_{d+1} - x_d^2)^2 + (1 - x_d)^2 on [-5, 10]^D"},
      {"rastrigin", BenchmarkKind::continuous, 1, 0, "10 D + sum x_d^2 - 10 cos(2 pi x_d) on [-5.12, 5.12]^D"},
      {"ackley", BenchmarkKind::continuous, 1, 0, "Ackley (a=20, b=0.2, c=2pi) on [-32.768, 32.768]^D"},
      {"faulty", BenchmarkKind::continuous, 1, 0,
       "sphere that returns NaN when x_0 > 5; exercises trial-failure reporting"},
      {"schaffer", BenchmarkKind::multiobjective, 1, 1, "(x^2, (x - 2)^2) on [-10, 10]"},
      {"onemax", BenchmarkKind::binary, 1, 0, "D - popcount over bit strings"},
  };
  return catalog;
}

const BenchmarkInfo& benchmark_info(std::string_view name) {
  for (const auto& info : benchmark_catalog()) {
    if (info.name == name) return info;
  }
  throw LookupError("unknown benchmark '" + std::string(name) + "'");
}

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rosenbrock(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t d = 0; d + 1 < x.size(); ++d) {
    const double a = x[d + 1] - x[d] * x[d];
    const double b = 1.0 - x[d];
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

double rastrigin(std::span<const double> x) {
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return sum;
}

double ackley(std::span<const double> x) {
  constexpr double a = 20.0;
  constexpr double b = 0.2;
  constexpr double c = 2.0 * std::numbers::pi;
  const double dim = static_cast<double>(x.size());
  double squares = 0.0;
  double cosines = 0.0;
  for (double v : x) {
    squares += v * v;
    cosines += std::cos(c * v);
  }
  return -a * std::exp(-b * std::sqrt(squares / dim)) - std::exp(cosines / dim) + a + std::numbers::e;
}

namespace {

double faulty(std::span<const double> x) {
  return x[0] > 5.0 ? std::numeric_limits<double>::quiet_NaN() : sphere(x);
}

void check_dimension(const BenchmarkInfo& info, std::size_t dimension) {
  if (dimension < info.min_dimension || (info.max_dimension != 0 && dimension > info.max_dimension)) {
    throw ContractError("benchmark '" + info.name + "' does not support dimension " + std::to_string(dimension));
  }
}

const BenchmarkInfo& require_kind(std::string_view name, BenchmarkKind kind) {
  const auto& info = benchmark_info(name);
  if (info.kind != kind) throw LookupError("benchmark '" + info.name + "' is not of the requested kind");
  return info;
}

}  // namespace

double BenchmarkFunction::operator()(std::span<const double> x) const { return eval_benchmark(name, x); }

ObjectiveProblem BenchmarkFunction::problem() const {
  return ObjectiveProblem(bounds, [f = *this](std::span<const double> x) { return f(x); });
}

BenchmarkFunction make_benchmark(std::string_view name, std::size_t dimension) {
  const auto& info = require_kind(name, BenchmarkKind::continuous);
  check_dimension(info, dimension);
  SolutionVector zeros(dimension, 0.0);
  if (name == "sphere" || name == "faulty") {
    return {info.name, dimension, Bounds::uniform(dimension, -5.12, 5.12), 0.0, zeros};
  }
  if (name == "rosenbrock") {
    return {info.name, dimension, Bounds::uniform(dimension, -5.0, 10.0), 0.0, SolutionVector(dimension, 1.0)};
  }
  if (name == "rastrigin") {
    return {info.name, dimension, Bounds::uniform(dimension, -5.12, 5.12), 0.0, zeros};
  }
  return {info.name, dimension, Bounds::uniform(dimension, -32.768, 32.768), 0.0, zeros};
}

double eval_benchmark(std::string_view name, std::span<const double> x) {
  if (name == "sphere") return sphere(x);
  if (name == "rosenbrock") return rosenbrock(x);
  if (name == "rastrigin") return rastrigin(x);
  if (name == "ackley") return ackley(x);
  if (name == "faulty") return faulty(x);
  throw LookupError("unknown benchmark '" + std::string(name) + "'");
}

mo::ObjectiveVector schaffer(std::span<const double> x) {
  if (x.size() != 1) throw ContractError("schaffer: expects a scalar decision variable");
  const double v = x[0];
  return {v * v, (v - 2.0) * (v - 2.0)};
}

mo::ObjectiveVector eval_mo_benchmark(std::string_view name, std::span<const double> x) {
  if (name == "schaffer") return schaffer(x);
  throw LookupError("unknown multiobjective benchmark '" + std::string(name) + "'");
}

mo::MultiObjectiveProblem make_mo_benchmark(std::string_view name, std::size_t dimension) {
  const auto& info = require_kind(name, BenchmarkKind::multiobjective);
  check_dimension(info, dimension);
  return mo::MultiObjectiveProblem(Bounds::uniform(1, -10.0, 10.0), 2,
                                   [](std::span<const double> x) { return schaffer(x); });
}

std::vector<double> mo_reference_point(std::string_view name) {
  require_kind(name, BenchmarkKind::multiobjective);
  return {4.0, 4.0};
}

double onemax(const BitVector& bits) { return static_cast<double>(bits.size() - bits.count()); }

BinaryProblem make_binary_benchmark(std::string_view name, std::size_t dimension) {
  const auto& info = require_kind(name, BenchmarkKind::binary);
  check_dimension(info, dimension);
  return BinaryProblem{dimension, [](const BitVector& bits) { return onemax(bits); }};
}

}  // namespace cuckoo::bench
