#include "cuckoo/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace cuckoo::report {

namespace {

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_results_csv(std::ostream& os, const bench::ExperimentSpec& spec, std::span<const bench::TrialRecord> records) {
  const std::string variant(to_string(spec.params.variant.kind()));
  os << "seed,benchmark,variant,final_best,evaluations,iterations,status\n";
  for (const auto& r : records) {
    os << r.seed << ',' << spec.benchmark << ',' << variant << ',' << format_real(r.final_best) << ','
       << r.evaluations << ',' << r.iterations << ',' << (r.status == bench::TrialStatus::ok ? "ok" : "failed")
       << '\n';
  }
}

void write_trace_csv(std::ostream& os, const bench::TrialRecord& record) {
  os << "iteration,best_fitness\n";
  for (const auto& point : record.trace) os << point.iteration << ',' << format_real(point.best) << '\n';
}

std::string render_convergence_svg(const bench::ExperimentSpec& spec, std::span<const bench::TrialRecord> records) {
  constexpr double width = 800.0;
  constexpr double height = 500.0;
  constexpr double left = 70.0;
  constexpr double right = 20.0;
  constexpr double top = 40.0;
  constexpr double bottom = 50.0;
  static constexpr std::array<const char*, 8> palette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                         "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

  double floor_value = std::numeric_limits<double>::infinity();
  double max_value = 0.0;
  std::size_t max_iteration = 1;
  for (const auto& r : records) {
    for (const auto& p : r.trace) {
      if (p.best > 0.0) floor_value = std::min(floor_value, p.best);
      max_value = std::max(max_value, p.best);
      max_iteration = std::max(max_iteration, p.iteration);
    }
  }
  if (!std::isfinite(floor_value)) floor_value = 1e-300;
  if (max_value <= floor_value) max_value = floor_value * 10.0;
  const double log_lo = std::floor(std::log10(floor_value));
  const double log_hi = std::max(std::ceil(std::log10(max_value)), log_lo + 1.0);

  auto px = [&](double iteration) { return left + (width - left - right) * iteration / static_cast<double>(max_iteration); };
  auto py = [&](double value) {
    const double lv = std::log10(std::max(value, floor_value));
    return top + (height - top - bottom) * (log_hi - lv) / (log_hi - log_lo);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << spec.benchmark << " D=" << spec.dimension << " (" << to_string(spec.params.variant.kind()) << ")</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
     << height - bottom << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
     << "\" stroke=\"black\"/>\n";
  for (double e = log_lo; e <= log_hi; e += std::max(1.0, std::ceil((log_hi - log_lo) / 10.0))) {
    const double y = py(std::pow(10.0, e));
    os << "<text x=\"" << left - 6 << "\" y=\"" << format_fixed(y + 4, 2)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << static_cast<int>(e) << "</text>\n";
  }
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">iteration (max " << max_iteration
     << ")</text>\n";

  std::size_t series = 0;
  for (const auto& r : records) {
    if (r.status != bench::TrialStatus::ok || r.trace.empty()) continue;
    os << "<polyline fill=\"none\" stroke-width=\"1.2\" stroke=\"" << palette[series++ % palette.size()]
       << "\" points=\"";
    for (const auto& p : r.trace) {
      os << format_fixed(px(static_cast<double>(p.iteration)), 2) << ',' << format_fixed(py(p.best), 2) << ' ';
    }
    os << "\"><title>seed " << r.seed << "</title></polyline>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cuckoo::report
