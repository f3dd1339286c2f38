#include "cuckoo/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "cuckoo/benchsuite.hpp"

namespace cuckoo::cli {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& message) { throw ConfigError(ConfigError::Kind::validation, message); }

void reject_unknown(const json& object, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      invalid("unknown field '" + where + key + "'");
    }
  }
}

const json& required(const json& object, const std::string& key, const std::string& where = "") {
  const auto it = object.find(key);
  if (it == object.end()) invalid("missing required field '" + where + key + "'");
  return *it;
}

std::uint64_t as_unsigned(const json& value, const std::string& name) {
  if (!value.is_number_unsigned()) {
    invalid(name + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

double as_real(const json& value, const std::string& name) {
  if (!value.is_number()) invalid(name + " must be a number");
  return value.get<double>();
}

std::string as_string(const json& value, const std::string& name) {
  if (!value.is_string()) invalid(name + " must be a string");
  return value.get<std::string>();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the offending character.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

AdaptiveSchedule parse_schedule(const json& j) {
  if (!j.is_object()) invalid("variant.schedule must be an object");
  reject_unknown(j, {"pa_max", "pa_min", "alpha_max", "alpha_min"}, "variant.schedule.");
  AdaptiveSchedule s;
  s.pa_max = as_real(required(j, "pa_max", "variant.schedule."), "variant.schedule.pa_max");
  s.pa_min = as_real(required(j, "pa_min", "variant.schedule."), "variant.schedule.pa_min");
  s.alpha_max = as_real(required(j, "alpha_max", "variant.schedule."), "variant.schedule.alpha_max");
  s.alpha_min = as_real(required(j, "alpha_min", "variant.schedule."), "variant.schedule.alpha_min");
  if (!(s.pa_max >= 0.0 && s.pa_max <= 1.0)) invalid("variant.schedule.pa_max must be within [0,1]");
  if (!(s.pa_min >= 0.0 && s.pa_min <= s.pa_max)) invalid("variant.schedule.pa_min must be within [0, pa_max]");
  if (!(s.alpha_max > 0.0)) invalid("variant.schedule.alpha_max must be positive");
  if (!(s.alpha_min > 0.0 && s.alpha_min <= s.alpha_max)) {
    invalid("variant.schedule.alpha_min must be within (0, alpha_max]");
  }
  return s;
}

VariantConfig parse_variant(const json& j) {
  if (!j.is_object()) invalid("variant must be an object");
  reject_unknown(j, {"kind", "chaotic_map", "chaotic_seed", "schedule", "transfer"}, "variant.");
  VariantKind kind;
  try {
    kind = parse_variant_kind(as_string(required(j, "kind", "variant."), "variant.kind"));
  } catch (const ContractError& e) {
    invalid(std::string("variant.kind: ") + e.what());
  }
  auto only_for = [&](const char* key, VariantKind owner) {
    if (j.contains(key) && kind != owner) {
      invalid(std::string("variant.") + key + " is only valid for variant kind '" +
              std::string(to_string(owner)) + "'");
    }
  };
  only_for("chaotic_map", VariantKind::chaotic);
  only_for("chaotic_seed", VariantKind::chaotic);
  only_for("schedule", VariantKind::self_adaptive);
  only_for("transfer", VariantKind::binary);

  switch (kind) {
    case VariantKind::standard:
      return {StandardVariant{}};
    case VariantKind::chaotic: {
      ChaoticVariant c;
      try {
        if (j.contains("chaotic_map")) c.map = parse_chaotic_map(as_string(j["chaotic_map"], "variant.chaotic_map"));
      } catch (const ContractError& e) {
        invalid(std::string("variant.chaotic_map: ") + e.what());
      }
      if (j.contains("chaotic_seed")) c.seed = as_real(j["chaotic_seed"], "variant.chaotic_seed");
      if (is_degenerate_state(c.map, c.seed)) {
        invalid("variant.chaotic_seed must be within (0,1) and not 0.25, 0.5, 0.75 or a fixed point of the map");
      }
      return {c};
    }
    case VariantKind::self_adaptive:
      return {SelfAdaptiveVariant{parse_schedule(required(j, "schedule", "variant."))}};
    case VariantKind::binary: {
      BinaryVariant b;
      try {
        if (j.contains("transfer")) b.transfer = parse_transfer_kind(as_string(j["transfer"], "variant.transfer"));
      } catch (const ContractError& e) {
        invalid(std::string("variant.transfer: ") + e.what());
      }
      return {b};
    }
  }
  return {StandardVariant{}};
}

}  // namespace

CliConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ConfigError(ConfigError::Kind::parse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                                    std::to_string(column) + ": " + e.what());
  }
  if (!root.is_object()) invalid("config must be a JSON object");
  reject_unknown(root,
                 {"benchmark", "dimension", "iterations", "seeds", "n", "pa", "alpha", "beta", "lambda", "variant",
                  "capacity"},
                 "");

  CliConfig config;
  auto& spec = config.experiment;
  auto& p = spec.params;

  spec.benchmark = as_string(required(root, "benchmark"), "benchmark");
  const bench::BenchmarkInfo* info = nullptr;
  try {
    info = &bench::benchmark_info(spec.benchmark);
  } catch (const bench::LookupError& e) {
    invalid(std::string("benchmark: ") + e.what());
  }

  spec.dimension = as_unsigned(required(root, "dimension"), "dimension");
  if (spec.dimension < info->min_dimension || (info->max_dimension != 0 && spec.dimension > info->max_dimension)) {
    invalid("dimension " + std::to_string(spec.dimension) + " is not supported by benchmark '" + spec.benchmark + "'");
  }
  p.max_iterations = as_unsigned(required(root, "iterations"), "iterations");
  if (p.max_iterations < 1) invalid("iterations must be at least 1");

  const json& seeds = required(root, "seeds");
  if (!seeds.is_array() || seeds.empty()) invalid("seeds must be a non-empty array of integers");
  for (const auto& s : seeds) spec.seeds.push_back(as_unsigned(s, "seeds entry"));
  if (std::set<std::uint64_t>(spec.seeds.begin(), spec.seeds.end()).size() != spec.seeds.size()) {
    invalid("seeds must be distinct");
  }

  if (root.contains("n")) p.n = as_unsigned(root["n"], "n");
  if (p.n < 2) invalid("n must be at least 2");
  if (root.contains("pa")) p.pa = as_real(root["pa"], "pa");
  if (!(p.pa >= 0.0 && p.pa <= 1.0)) invalid("pa must be within [0,1]");
  if (root.contains("alpha")) p.alpha = as_real(root["alpha"], "alpha");
  if (!(p.alpha > 0.0)) invalid("alpha must be positive");
  if (root.contains("beta")) p.beta = as_real(root["beta"], "beta");
  if (!(p.beta > 0.0)) invalid("beta must be positive");
  if (root.contains("lambda")) p.lambda = as_real(root["lambda"], "lambda");
  if (!(p.lambda >= kLevyLambdaMin && p.lambda <= kLevyLambdaMax)) invalid("lambda must be within [0.3,1.99]");
  if (root.contains("variant")) p.variant = parse_variant(root["variant"]);

  if (root.contains("capacity")) {
    if (info->kind != bench::BenchmarkKind::multiobjective) {
      invalid("capacity is only valid for multiobjective benchmarks");
    }
    spec.capacity = as_unsigned(root["capacity"], "capacity");
    if (spec.capacity < 10) invalid("capacity must be at least 10");
  }

  try {
    spec.validate();
  } catch (const std::exception& e) {
    invalid(e.what());
  }
  return config;
}

std::string serialize_config(const CliConfig& config) {
  const auto& spec = config.experiment;
  const auto& p = spec.params;
  json root;
  root["benchmark"] = spec.benchmark;
  root["dimension"] = spec.dimension;
  root["iterations"] = p.max_iterations;
  root["seeds"] = spec.seeds;
  root["n"] = p.n;
  root["pa"] = p.pa;
  root["alpha"] = p.alpha;
  root["beta"] = p.beta;
  root["lambda"] = p.lambda;

  json variant;
  variant["kind"] = std::string(to_string(p.variant.kind()));
  if (const auto* c = std::get_if<ChaoticVariant>(&p.variant.mechanism)) {
    variant["chaotic_map"] = std::string(to_string(c->map));
    variant["chaotic_seed"] = c->seed;
  } else if (const auto* a = std::get_if<SelfAdaptiveVariant>(&p.variant.mechanism)) {
    variant["schedule"] = {{"pa_max", a->schedule.pa_max},
                           {"pa_min", a->schedule.pa_min},
                           {"alpha_max", a->schedule.alpha_max},
                           {"alpha_min", a->schedule.alpha_min}};
  } else if (const auto* b = std::get_if<BinaryVariant>(&p.variant.mechanism)) {
    variant["transfer"] = std::string(to_string(b->transfer));
  }
  root["variant"] = variant;

  if (bench::benchmark_info(spec.benchmark).kind == bench::BenchmarkKind::multiobjective) {
    root["capacity"] = spec.capacity;
  }
  return root.dump(2) + "\n";
}

}  // namespace cuckoo::cli
