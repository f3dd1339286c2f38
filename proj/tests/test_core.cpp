#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "cuckoo/core.hpp"

using namespace cuckoo;

namespace {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

TEST_CASE("bounds validate their invariants") {
  CHECK_THROWS_AS(Bounds({0.0, 0.0}, {1.0}), ContractError);
  CHECK_THROWS_AS(Bounds({1.0}, {1.0}), ContractError);
  CHECK_THROWS_AS(Bounds({2.0}, {1.0}), ContractError);
  const Bounds b = Bounds::uniform(3, -1.0, 1.0);
  CHECK(b.dimension() == 3);
  CHECK(b.range(2) == doctest::Approx(2.0));
}

TEST_CASE("clamp projects into the box") {
  const Bounds unit = Bounds::uniform(2, 0.0, 1.0);
  CHECK(clamp(unit, {0.5, 0.5}) == SolutionVector{0.5, 0.5});
  CHECK(clamp(unit, {-3.0, 2.0}) == SolutionVector{0.0, 1.0});
  CHECK(clamp(Bounds::uniform(1, -5.0, 5.0), {5.0}) == SolutionVector{5.0});
  CHECK_THROWS_AS(clamp(unit, {0.5}), ContractError);
}

TEST_CASE("clamp is idempotent and lands in bounds") {
  RngStream rng(5);
  const Bounds b({-1.0, 0.0, 10.0}, {1.0, 0.5, 20.0});
  for (int trial = 0; trial < 1000; ++trial) {
    SolutionVector x = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0, 30)};
    const auto once = clamp(b, x);
    CHECK(clamp(b, once) == once);
    CHECK(b.contains(once));
  }
}

TEST_CASE("init_population draws in bounds and marks the best nest") {
  const ObjectiveProblem unit(Bounds::uniform(1, 0.0, 1.0), sphere);
  RngStream rng(9);
  const auto pop = init_population(unit, 2, rng);
  REQUIRE(pop.size() == 2);
  for (const auto& nest : pop.nests) CHECK(unit.bounds.contains(nest.position));
  CHECK(best_of(pop).fitness <= pop.nests[1 - pop.best].fitness);

  RngStream again(9);
  CHECK(init_population(unit, 2, again) == pop);

  CHECK_THROWS_AS(init_population(unit, 1, rng), ContractError);
}

TEST_CASE("init_population on a constant objective picks index 0") {
  const ObjectiveProblem flat(Bounds::uniform(2, -1.0, 1.0), [](std::span<const double>) { return 0.0; });
  RngStream rng(1);
  CHECK(init_population(flat, 10, rng).best == 0);
}

TEST_CASE("sphere D=3 n=25 seed 42: best equals recomputed minimum") {
  const ObjectiveProblem p(Bounds::uniform(3, -5.12, 5.12), sphere);
  RngStream rng(42);
  const auto pop = init_population(p, 25, rng);
  double min = std::numeric_limits<double>::infinity();
  for (const auto& nest : pop.nests) {
    CHECK(nest.fitness == sphere(nest.position));
    min = std::min(min, sphere(nest.position));
  }
  CHECK(best_of(pop).fitness == min);
}

TEST_CASE("non-finite objective is an evaluation error carrying the point") {
  const ObjectiveProblem bad(Bounds::uniform(2, 0.0, 1.0),
                             [](std::span<const double>) { return std::numeric_limits<double>::quiet_NaN(); });
  RngStream rng(1);
  try {
    (void)init_population(bad, 3, rng);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.point().size() == 2);
    CHECK(std::isnan(e.value()));
    CHECK_FALSE(e.iteration().has_value());
  }
}

TEST_CASE("pick_distinct_pair") {
  RngStream rng(17);
  SUBCASE("n = 2 yields a permutation of {0, 1}") {
    for (int i = 0; i < 100; ++i) {
      const auto [j, k] = pick_distinct_pair(2, rng);
      CHECK(j != k);
      CHECK(j + k == 1);
    }
  }
  SUBCASE("n < 2 is a contract error") { CHECK_THROWS_AS(pick_distinct_pair(1, rng), ContractError); }
  SUBCASE("deterministic per seed") {
    RngStream a(99);
    RngStream b(99);
    CHECK(pick_distinct_pair(6, a) == pick_distinct_pair(6, b));
  }
  SUBCASE("n = 5: every ordered pair within 4 sd of 1/20") {
    constexpr int draws = 100000;
    std::array<std::array<int, 5>, 5> counts{};
    for (int i = 0; i < draws; ++i) {
      const auto [j, k] = pick_distinct_pair(5, rng);
      REQUIRE(j != k);
      ++counts[j][k];
    }
    const double p = 1.0 / 20.0;
    const double sd = std::sqrt(draws * p * (1 - p));
    double chi2 = 0.0;
    for (std::size_t j = 0; j < 5; ++j) {
      for (std::size_t k = 0; k < 5; ++k) {
        if (j == k) {
          CHECK(counts[j][k] == 0);
          continue;
        }
        CHECK(std::fabs(counts[j][k] - draws * p) < 4.0 * sd);
        chi2 += std::pow(counts[j][k] - draws * p, 2) / (draws * p);
      }
    }
    // 19 degrees of freedom; 43.8 is the 0.999 quantile.
    CHECK(chi2 < 43.8);
  }
}

TEST_CASE("best_of") {
  auto make = [](std::vector<double> fitness) {
    Population pop;
    for (double f : fitness) pop.nests.push_back(Nest{{0.0}, f});
    pop.refresh_best();
    return pop;
  };
  CHECK(make({3, 1, 2}).best == 1);
  CHECK(make({1, 1}).best == 0);
  CHECK_THROWS_AS(best_of(Population{}), ContractError);

  RngStream rng(4);
  for (std::size_t n : {2u, 10u, 100u, 1000u}) {
    std::vector<double> f(n);
    for (auto& v : f) v = std::floor(rng.uniform(0, 50));  // ties likely
    const auto pop = make(f);
    std::size_t scan = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i] < f[scan]) scan = i;
    }
    CHECK(pop.best == scan);
    CHECK(best_of(pop).fitness == *std::min_element(f.begin(), f.end()));
  }
}
