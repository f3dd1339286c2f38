#include "cuckoo/levy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "cuckoo/core.hpp"

namespace cuckoo {

double mantegna_sigma(double lambda) {
  if (!(lambda >= kLevyLambdaMin && lambda <= kLevyLambdaMax)) {
    throw ContractError("mantegna_sigma: lambda must be within [0.3, 1.99], got " + std::to_string(lambda));
  }
  const double num = std::tgamma(1.0 + lambda) * std::sin(std::numbers::pi * lambda / 2.0);
  const double den = std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / lambda);
}

LevyParams::LevyParams(double lambda) : lambda_(lambda), sigma_u_(mantegna_sigma(lambda)) {}

double sample_levy(RngStream& rng, const LevyParams& params) {
  const double u = params.sigma_u() * rng.normal();
  double v = rng.normal();
  while (v == 0.0) v = rng.normal();
  return u / std::pow(std::fabs(v), 1.0 / params.lambda());
}

std::vector<double> sample_levy_vector(RngStream& rng, const LevyParams& params, std::size_t d) {
  if (d == 0) throw ContractError("sample_levy_vector: d must be positive");
  std::vector<double> out(d);
  for (auto& x : out) x = sample_levy(rng, params);
  return out;
}

double tail_exponent_estimate(std::span<const double> samples, std::size_t k) {
  if (k < 10) throw ContractError("tail_exponent_estimate: k must be at least 10");
  if (k >= samples.size()) throw ContractError("tail_exponent_estimate: k must be below the sample count");
  std::vector<double> mags;
  mags.reserve(samples.size());
  for (double x : samples) {
    if (x != 0.0) mags.push_back(std::fabs(x));
  }
  if (mags.size() < k + 1) throw ContractError("tail_exponent_estimate: fewer than k+1 nonzero samples");

  // Top k+1 magnitudes, descending; mags[k] is the threshold order statistic.
  std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(k), mags.end(), std::greater<>());
  const double threshold = mags[k];
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += std::log(mags[i] / threshold);
  if (!(sum > 0.0)) throw ContractError("tail_exponent_estimate: zero log-spacings (degenerate sample)");
  return static_cast<double>(k) / sum;
}

}  // namespace cuckoo
