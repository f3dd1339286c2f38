#pragma once

#include <ostream>
#include <span>
#include <string>

#include "cuckoo/experiment.hpp"

namespace cuckoo::report {

/// Shortest-stable text for a double: 17 significant digits, '.' decimal
/// separator, lowercase exponent, independent of the global locale.
std::string format_real(double value);

/// Header `seed,benchmark,variant,final_best,evaluations,iterations,status`
/// and one row per record, in record order.
void write_results_csv(std::ostream& os, const bench::ExperimentSpec& spec, std::span<const bench::TrialRecord> records);

/// Header `iteration,best_fitness` and one row per trace point.
void write_trace_csv(std::ostream& os, const bench::TrialRecord& record);

/// Line chart of best fitness against iteration on a log10 axis, one
/// polyline per successful record.
std::string render_convergence_svg(const bench::ExperimentSpec& spec, std::span<const bench::TrialRecord> records);

}  // namespace cuckoo::report
