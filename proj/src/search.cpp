#include "cuckoo/search.hpp"

#include <cmath>
#include <memory>

namespace cuckoo {

void CsParams::validate() const {
  if (n < 2) throw ContractError("n must be at least 2");
  if (!(pa >= 0.0 && pa <= 1.0)) throw ContractError("pa must be within [0,1]");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ContractError("alpha must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ContractError("beta must be positive");
  if (!(lambda >= kLevyLambdaMin && lambda <= kLevyLambdaMax)) {
    throw ContractError("lambda must be within [0.3, 1.99]");
  }
  variant.validate();
}

double WalkSource::epsilon(RngStream& rng) {
  if (chaos_) {
    ++audit_.chaotic_epsilon;
    return chaos_->next();
  }
  ++audit_.uniform_epsilon;
  return rng.uniform01();
}

double WalkSource::step(RngStream& rng) {
  if (chaos_) {
    ++audit_.chaotic_step;
    return chaos_->next();
  }
  ++audit_.uniform_step;
  return rng.uniform01();
}

SolutionVector apply_levy_step(std::span<const double> x, std::span<const double> step, double alpha,
                               const Bounds& bounds) {
  if (x.size() != bounds.dimension() || step.size() != x.size()) {
    throw ContractError("apply_levy_step: length mismatch");
  }
  SolutionVector out(x.begin(), x.end());
  for (std::size_t d = 0; d < out.size(); ++d) out[d] += alpha * bounds.range(d) * step[d];
  return clamp(bounds, std::move(out));
}

SolutionVector levy_flight_move(std::span<const double> x, const CsParams& params, const Bounds& bounds,
                                RngStream& rng) {
  const LevyParams levy(params.lambda);
  const auto step = sample_levy_vector(rng, levy, x.size());
  return apply_levy_step(x, step, params.alpha, bounds);
}

std::pair<std::size_t, std::size_t> pick_walk_partners(std::size_t n, std::size_t i, RngStream& rng) {
  auto pair = pick_distinct_pair(n, rng);
  if (n >= 3) {
    while (pair.first == i || pair.second == i) pair = pick_distinct_pair(n, rng);
  }
  return pair;
}

SolutionVector discovery_move(const Population& population, std::size_t i, const CsParams& params,
                              const Bounds& bounds, RngStream& rng, WalkSource& walk) {
  const std::size_t n = population.size();
  if (n < 2) throw ContractError("discovery_move: need at least two nests");
  if (i >= n) throw ContractError("discovery_move: nest index out of range");
  const auto [j, k] = pick_walk_partners(n, i, rng);
  const auto& xi = population.nests[i].position;
  const auto& xj = population.nests[j].position;
  const auto& xk = population.nests[k].position;
  SolutionVector out = xi;
  for (std::size_t d = 0; d < out.size(); ++d) {
    const double eps = walk.epsilon(rng);
    const double s = walk.step(rng);
    // H(u) = 1 for u > 0, 0 otherwise (including u = 0).
    if (params.pa - eps > 0.0) out[d] += params.beta * s * (xj[d] - xk[d]);
  }
  return clamp(bounds, std::move(out));
}

SolutionVector discovery_move(const Population& population, std::size_t i, const CsParams& params,
                              const Bounds& bounds, RngStream& rng) {
  WalkSource uniform;
  return discovery_move(population, i, params, bounds, rng, uniform);
}

Nest greedy_select(const Nest& current, SolutionVector candidate, const ObjectiveProblem& problem) {
  const double f = problem.evaluate(candidate);
  if (f < current.fitness) return Nest{std::move(candidate), f};
  return current;
}

SearchState make_initial_state(const ObjectiveProblem& problem, const CsParams& params) {
  SearchState state;
  state.rng = RngStream(params.seed);
  state.population = init_population(problem, params.n, state.rng);
  if (const auto* c = std::get_if<ChaoticVariant>(&params.variant.mechanism)) {
    state.walk = WalkSource(ChaoticSequence(c->map, c->seed));
  }
  state.best_trace.push_back({0, best_of(state.population).fitness});
  return state;
}

SearchState cs_step(SearchState state, const ObjectiveProblem& problem, const CsParams& params) {
  auto& pop = state.population;
  const std::size_t n = pop.size();
  const Bounds& bounds = problem.bounds;
  try {
    for (std::size_t i = 0; i < n; ++i) {
      auto candidate = levy_flight_move(pop.nests[i].position, params, bounds, state.rng);
      const std::size_t m = state.rng.uniform_index(n);
      pop.nests[m] = greedy_select(pop.nests[m], std::move(candidate), problem);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto candidate = discovery_move(pop, i, params, bounds, state.rng, state.walk);
      pop.nests[i] = greedy_select(pop.nests[i], std::move(candidate), problem);
    }
  } catch (const EvaluationError& e) {
    throw e.at_iteration(state.iteration);
  }
  pop.refresh_best();
  ++state.iteration;
  state.best_trace.push_back({state.iteration, best_of(pop).fitness});
  return state;
}

CsParams effective_params(const CsParams& params, std::size_t t) {
  const auto* adaptive = std::get_if<SelfAdaptiveVariant>(&params.variant.mechanism);
  if (adaptive == nullptr) return params;
  CsParams out = params;
  const auto now = adaptive_params(t, std::max<std::size_t>(params.max_iterations, 1), adaptive->schedule);
  out.pa = now.pa;
  out.alpha = now.alpha;
  return out;
}

RunResult cs_run(const ObjectiveProblem& problem, const CsParams& params) {
  params.validate();
  if (params.variant.kind() == VariantKind::binary) {
    throw ContractError("cs_run: binary variant requires binary_cs_run");
  }
  auto calls = std::make_shared<std::size_t>(0);
  const ObjectiveProblem counted(problem.bounds, [calls, f = problem.objective](std::span<const double> x) {
    ++*calls;
    return f(x);
  });

  SearchState state = make_initial_state(counted, params);
  for (std::size_t t = 0; t < params.max_iterations; ++t) {
    state = cs_step(std::move(state), counted, effective_params(params, t));
  }

  RunResult result;
  result.best = best_of(state.population);
  result.evaluations = *calls;
  result.trace = std::move(state.best_trace);
  result.params_echo = params;
  result.audit = state.walk.audit();
  return result;
}

}  // namespace cuckoo
