#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cuckoo/benchsuite.hpp"
#include "cuckoo/experiment.hpp"

using namespace cuckoo;
using namespace cuckoo::bench;

namespace {

ExperimentSpec small_spec(std::string name, std::size_t dim, std::size_t seeds) {
  ExperimentSpec spec;
  spec.benchmark = std::move(name);
  spec.dimension = dim;
  spec.params.max_iterations = 60;
  spec.params.n = 10;
  for (std::size_t s = 0; s < seeds; ++s) spec.seeds.push_back(1000 + 7 * s);
  return spec;
}

bool same_records(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].same_outcome(b[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("benchmark functions at their optima") {
  for (std::size_t d : {1u, 2u, 5u, 30u}) {
    const std::vector<double> zeros(d, 0.0);
    const std::vector<double> ones(d, 1.0);
    CHECK(eval_benchmark("sphere", zeros) == 0.0);
    CHECK(std::fabs(eval_benchmark("rastrigin", zeros)) <= 1e-12);
    CHECK(std::fabs(eval_benchmark("ackley", zeros)) <= 1e-12);
    if (d >= 2) CHECK(eval_benchmark("rosenbrock", ones) == 0.0);
  }
  for (const auto& info : benchmark_catalog()) {
    if (info.kind != BenchmarkKind::continuous) continue;
    const auto f = make_benchmark(info.name, 4);
    REQUIRE(f.optimum_position.has_value());
    CHECK(f.bounds.contains(*f.optimum_position));
    CHECK(std::fabs(f(*f.optimum_position) - f.known_optimum) <= 1e-12);
  }
}

TEST_CASE("benchmark formulas at a non-optimal point") {
  const std::vector<double> x = {0.5, -1.0};
  CHECK(sphere(x) == doctest::Approx(1.25));
  CHECK(rosenbrock(x) == doctest::Approx(100.0 * std::pow(-1.0 - 0.25, 2) + 0.25));
  CHECK(rastrigin(x) == doctest::Approx(20.0 + 1.25 - 10.0 * (std::cos(M_PI) + std::cos(-2.0 * M_PI))));
  const double a = -20.0 * std::exp(-0.2 * std::sqrt(1.25 / 2.0)) -
                   std::exp((std::cos(M_PI) + std::cos(-2.0 * M_PI)) / 2.0) + 20.0 + std::exp(1.0);
  CHECK(ackley(x) == doctest::Approx(a));
}

TEST_CASE("benchmark lookup and bounds") {
  CHECK_THROWS_AS(eval_benchmark("griewank", std::vector{0.0}), LookupError);
  CHECK_THROWS_AS(make_benchmark("schaffer", 1), LookupError);
  CHECK_THROWS_AS(make_benchmark("rosenbrock", 1), ContractError);
  CHECK(make_benchmark("rosenbrock", 3).bounds == Bounds::uniform(3, -5.0, 10.0));
  CHECK(make_benchmark("ackley", 2).bounds == Bounds::uniform(2, -32.768, 32.768));
  CHECK(make_benchmark("rastrigin", 2).bounds == Bounds::uniform(2, -5.12, 5.12));
}

TEST_CASE("schaffer") {
  CHECK(eval_mo_benchmark("schaffer", std::vector{0.0}) == mo::ObjectiveVector{0.0, 4.0});
  CHECK(eval_mo_benchmark("schaffer", std::vector{2.0}) == mo::ObjectiveVector{4.0, 0.0});
  CHECK(eval_mo_benchmark("schaffer", std::vector{1.0}) == mo::ObjectiveVector{1.0, 1.0});
  CHECK_THROWS_AS(eval_mo_benchmark("zdt1", std::vector{0.0}), LookupError);
}

TEST_CASE("onemax") {
  CHECK(onemax(BitVector(8, true)) == 0.0);
  CHECK(onemax(BitVector(8, false)) == 8.0);
}

TEST_CASE("run_experiment with one seed equals a direct cs_run") {
  const auto spec = small_spec("rastrigin", 3, 1);
  const auto records = run_experiment(spec, 1);
  REQUIRE(records.size() == 1);
  CsParams p = spec.params;
  p.seed = spec.seeds[0];
  const auto direct = cs_run(make_benchmark("rastrigin", 3).problem(), p);
  CHECK(records[0].final_best == direct.best.fitness);
  CHECK(records[0].evaluations == direct.evaluations);
  CHECK(records[0].trace == direct.trace);
  CHECK(records[0].status == TrialStatus::ok);
}

TEST_CASE("run_experiment is deterministic and schedule-independent") {
  for (const char* name : {"sphere", "schaffer", "onemax"}) {
    CAPTURE(name);
    auto spec = small_spec(name, std::string(name) == "schaffer" ? 1 : 6, 20);
    if (std::string(name) == "onemax") spec.params.variant.mechanism = BinaryVariant{};
    const auto serial = run_experiment_serial(spec);
    CHECK(same_records(serial, run_experiment_serial(spec)));
    CHECK(same_records(serial, run_experiment(spec, 1)));
    CHECK(same_records(serial, run_experiment(spec, 4)));
    CHECK(same_records(serial, run_experiment(spec, 8)));
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].seed == spec.seeds[i]);
  }
}

TEST_CASE("multiobjective and binary trials report through the same record") {
  auto mo_spec = small_spec("schaffer", 1, 2);
  const auto mo_records = run_experiment(mo_spec, 2);
  for (const auto& r : mo_records) {
    CHECK(r.status == TrialStatus::ok);
    CHECK(r.trace.size() == 61);
    CHECK(r.final_best == r.trace.back().best);
    CHECK(r.final_best > 12.0);
    CHECK(r.final_best < 40.0 / 3.0);
    CHECK(r.evaluations == 10 + 2 * 10 * 60);
  }
  auto bin_spec = small_spec("onemax", 8, 2);
  bin_spec.params.variant.mechanism = BinaryVariant{};
  for (const auto& r : run_experiment(bin_spec, 2)) {
    REQUIRE(r.best_bits.has_value());
    CHECK(onemax(*r.best_bits) == r.final_best);
  }
}

TEST_CASE("failing trials are recorded and the rest continue") {
  auto spec = small_spec("faulty", 2, 12);
  const auto records = run_experiment(spec, 3);
  REQUIRE(records.size() == 12);
  const auto failed = std::count_if(records.begin(), records.end(),
                                    [](const TrialRecord& r) { return r.status == TrialStatus::failed; });
  CHECK(failed > 0);
  CHECK(failed < 12);
  for (const auto& r : records) {
    if (r.status == TrialStatus::failed) {
      CHECK(std::isnan(r.final_best));
      CHECK(r.error.find("non-finite") != std::string::npos);
    } else {
      CHECK(r.evaluations == 10 + 2 * 10 * 60);
    }
  }
}

TEST_CASE("experiment spec validation") {
  auto spec = small_spec("sphere", 2, 3);
  CHECK_NOTHROW(spec.validate());
  spec.seeds = {1, 1};
  CHECK_THROWS_AS(spec.validate(), ContractError);
  spec.seeds = {};
  CHECK_THROWS_AS(spec.validate(), ContractError);
  spec = small_spec("onemax", 4, 2);
  CHECK_THROWS_AS(spec.validate(), ContractError);  // needs the binary variant
  spec = small_spec("sphere", 4, 2);
  spec.params.variant.mechanism = BinaryVariant{};
  CHECK_THROWS_AS(spec.validate(), ContractError);
  spec = small_spec("nope", 4, 2);
  CHECK_THROWS_AS(spec.validate(), LookupError);
  spec = small_spec("schaffer", 2, 2);
  CHECK_THROWS_AS(spec.validate(), ContractError);
}

TEST_CASE("summarize") {
  auto records_of = [](std::vector<double> values) {
    std::vector<TrialRecord> out;
    for (double v : values) {
      TrialRecord r;
      r.final_best = v;
      out.push_back(r);
    }
    return out;
  };
  const auto single = summarize(records_of({3.0}));
  CHECK(single.min == 3.0);
  CHECK(single.median == 3.0);
  CHECK(single.mean == 3.0);
  CHECK(single.max == 3.0);
  CHECK(single.iqr == 0.0);

  const auto four = summarize(records_of({4.0, 2.0, 3.0, 1.0}));
  CHECK(four.median == 2.0);
  CHECK(four.q1 == doctest::Approx(1.75));
  CHECK(four.q3 == doctest::Approx(3.25));
  CHECK(four.iqr == doctest::Approx(1.5));
  CHECK_THROWS_AS(summarize(std::vector<TrialRecord>{}), ContractError);

  RngStream rng(14);
  std::vector<double> values(100);
  for (auto& v : values) v = rng.uniform(-3, 3);
  const auto s = summarize(records_of(values));
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  CHECK(s.min == sorted.front());
  CHECK(s.max == sorted.back());
  CHECK(s.median == sorted[49]);
  double sum = 0.0;
  for (double v : sorted) sum += v;
  CHECK(s.mean == doctest::Approx(sum / 100.0));
  // type-7 quartiles: positions 24.75 and 74.25
  CHECK(s.q1 == doctest::Approx(sorted[24] + 0.75 * (sorted[25] - sorted[24])));
  CHECK(s.q3 == doctest::Approx(sorted[74] + 0.25 * (sorted[75] - sorted[74])));
}
