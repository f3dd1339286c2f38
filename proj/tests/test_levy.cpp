#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cuckoo/core.hpp"
#include "cuckoo/levy.hpp"

using namespace cuckoo;

namespace {

std::vector<double> levy_samples(std::uint64_t seed, double lambda, std::size_t n) {
  RngStream rng(seed);
  const LevyParams params(lambda);
  std::vector<double> out(n);
  for (auto& x : out) x = sample_levy(rng, params);
  return out;
}

double variance(std::span<const double> v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s / static_cast<double>(v.size() - 1);
}

double median_of(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
  return v[v.size() / 2];
}

}  // namespace

TEST_CASE("mantegna_sigma closed form") {
  // Reference values evaluated with 30-digit arbitrary precision gamma.
  CHECK(mantegna_sigma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mantegna_sigma(1.5) == doctest::Approx(0.696574502557696792).epsilon(1e-13));
  CHECK(mantegna_sigma(0.3) == doctest::Approx(2.104113792923326459).epsilon(1e-13));
  CHECK(mantegna_sigma(1.99) == doctest::Approx(0.110693022307287261).epsilon(1e-12));
  CHECK_THROWS_AS(mantegna_sigma(0.29), ContractError);
  CHECK_THROWS_AS(mantegna_sigma(2.0), ContractError);
  CHECK(LevyParams(1.5).sigma_u() == mantegna_sigma(1.5));
}

TEST_CASE("sample_levy_vector is deterministic per stream state") {
  const RngStream base(123);
  RngStream a = base;
  RngStream b = base;
  const LevyParams p(1.5);
  CHECK(sample_levy_vector(a, p, 3) == sample_levy_vector(b, p, 3));
  CHECK_THROWS_AS(sample_levy_vector(a, p, 0), ContractError);
}

TEST_CASE("sample_levy follows u / |v|^(1/lambda) in draw order u, v") {
  const RngStream base(77);
  RngStream rng = base;
  RngStream replay = base;
  const LevyParams p(1.3);
  const double step = sample_levy(rng, p);
  const double u = p.sigma_u() * replay.normal();
  const double v = replay.normal();
  CHECK(step == u / std::pow(std::fabs(v), 1.0 / 1.3));
}

TEST_CASE("Lévy steps are symmetric") {
  const auto s = levy_samples(5, 1.5, 1000000);
  const auto negative = std::count_if(s.begin(), s.end(), [](double x) { return x < 0.0; });
  const double sd = std::sqrt(1e6 * 0.25);
  CHECK(std::fabs(static_cast<double>(negative) - 5e5) < 4.0 * sd);
}

TEST_CASE("lambda = 1 is a standard Cauchy ratio with median |step| = 1") {
  auto s = levy_samples(6, 1.0, 1000000);
  for (auto& x : s) x = std::fabs(x);
  CHECK(median_of(s) == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("lambda = 1.5: finite median, variance grows with sample size") {
  std::vector<double> ratios;
  std::vector<double> gaussian_ratios;
  std::vector<double> max_share;
  std::vector<double> gaussian_max_share;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto s = levy_samples(seed, 1.5, 1000000);
    ratios.push_back(variance(s) / variance(std::span(s).first(10000)));
    double total = 0.0;
    double biggest = 0.0;
    for (double x : s) {
      total += x * x;
      biggest = std::max(biggest, x * x);
    }
    max_share.push_back(biggest / total);
    if (seed == 1) {
      for (auto& x : s) x = std::fabs(x);
      const double med = median_of(s);
      CHECK(std::isfinite(med));
      CHECK(med > 0.1);
      CHECK(med < 10.0);
    }

    RngStream rng(seed + 1000);
    std::vector<double> g(1000000);
    total = 0.0;
    biggest = 0.0;
    for (auto& x : g) {
      x = rng.normal();
      total += x * x;
      biggest = std::max(biggest, x * x);
    }
    gaussian_ratios.push_back(variance(g) / variance(std::span(g).first(10000)));
    gaussian_max_share.push_back(biggest / total);
  }
  CHECK(median_of(ratios) > 1.5);
  CHECK(median_of(gaussian_ratios) > 0.9);
  CHECK(median_of(gaussian_ratios) < 1.1);
  CHECK(median_of(max_share) > 0.05);
  CHECK(median_of(gaussian_max_share) < 1e-3);
}

TEST_CASE("Hill estimator recovers the Lévy tail exponent") {
  for (double lambda : {1.2, 1.5, 1.8}) {
    CAPTURE(lambda);
    const auto s = levy_samples(static_cast<std::uint64_t>(lambda * 100), lambda, 1000000);
    CHECK(std::fabs(tail_exponent_estimate(s, 10000) - lambda) < 0.15);
  }
}

TEST_CASE("Hill estimator on an exact Pareto sample") {
  RngStream rng(31);
  std::vector<double> s(1000000);
  for (auto& x : s) x = std::pow(1.0 - rng.uniform01(), -1.0 / 1.5);  // u in (0, 1]
  const double est = tail_exponent_estimate(s, 10000);
  CHECK(est >= 1.45);
  CHECK(est <= 1.55);
}

TEST_CASE("Hill estimator rejects thin tails and degenerate input") {
  RngStream rng(8);
  std::vector<double> g(1000000);
  for (auto& x : g) x = rng.normal();
  CHECK(tail_exponent_estimate(g, 10000) > 2.5);

  const std::vector<double> flat(100, 3.0);
  CHECK_THROWS_AS(tail_exponent_estimate(flat, 10), ContractError);
  CHECK_THROWS_AS(tail_exponent_estimate(g, 9), ContractError);
  CHECK_THROWS_AS(tail_exponent_estimate(std::span(g).first(10), 10), ContractError);
  std::vector<double> zeros(100, 0.0);
  zeros[0] = 1.0;
  CHECK_THROWS_AS(tail_exponent_estimate(zeros, 10), ContractError);
}
