#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cuckoo/rng.hpp"

namespace cuckoo {

inline constexpr double kLevyLambdaMin = 0.3;
inline constexpr double kLevyLambdaMax = 1.99;
inline constexpr double kDefaultLevyLambda = 1.5;

/// Mantegna scale sigma_u for tail exponent lambda in [0.3, 1.99]:
///
///   sigma_u = [ G(1+l) sin(pi l / 2) / ( G((1+l)/2) l 2^((l-1)/2) ) ]^(1/l)
double mantegna_sigma(double lambda);

/// Tail exponent with its cached Mantegna scale.
class LevyParams {
 public:
  explicit LevyParams(double lambda = kDefaultLevyLambda);

  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double sigma_u() const noexcept { return sigma_u_; }

  friend bool operator==(const LevyParams&, const LevyParams&) = default;

 private:
  double lambda_;
  double sigma_u_;
};

/// One Mantegna step u / |v|^(1/lambda), u ~ N(0, sigma_u^2), v ~ N(0, 1).
/// Draw order: u first, then v (v re-drawn while exactly zero).
double sample_levy(RngStream& rng, const LevyParams& params);

std::vector<double> sample_levy_vector(RngStream& rng, const LevyParams& params, std::size_t d);

/// Hill estimator of the tail index over the k largest |x|:
///   k / sum_{i<=k} ln(|x|_(i) / |x|_(k+1)).
/// Requires 10 <= k < samples.size() and at least k+1 nonzero samples.
double tail_exponent_estimate(std::span<const double> samples, std::size_t k);

}  // namespace cuckoo
