#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cuckoo/experiment.hpp"

namespace cuckoo::cli {

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { parse, validation };

  ConfigError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A validated experiment plus the run-time options that come from flags.
struct CliConfig {
  bench::ExperimentSpec experiment;
  std::string out_dir = "cuckoo_out";
  bool plot = false;
  std::size_t jobs = 1;

  friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

/// Parse and validate a JSON experiment config. Omitted optional fields take
/// the defaults n=25, pa=0.25, alpha=0.01, beta=1, lambda=1.5, variant
/// standard, capacity 50 (multiobjective benchmarks only).
CliConfig parse_config(std::string_view text);

/// JSON text that parse_config maps back to the same experiment. Every field
/// is written explicitly.
std::string serialize_config(const CliConfig& config);

}  // namespace cuckoo::cli
