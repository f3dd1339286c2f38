#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cuckoo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kVersion = "0.1.0";

/// Entry point behind the `cuckoo-opt` binary. `args[0]` is the program name.
///
///   run --config <path> [--out <dir>] [--jobs <k>] [--plot]
///   list-benchmarks
///   version
///
/// Returns 0 on success, 1 when a trial fails or output cannot be written,
/// 2 on usage or config errors.
int run_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cuckoo::cli
