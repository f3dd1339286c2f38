#include "cuckoo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cuckoo/benchsuite.hpp"
#include "cuckoo/config.hpp"
#include "cuckoo/experiment.hpp"
#include "cuckoo/report.hpp"

namespace cuckoo::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_jobs(const std::string& text, const std::string& source) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || value < 1 || text.front() == '-') {
    throw UsageError(source + " must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

int command_run(const std::string& config_path, const std::string& out_dir, std::optional<std::size_t> jobs_flag,
                bool plot, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    config = parse_config(read_file(config_path));
    config.out_dir = out_dir;
    config.plot = plot;
    if (jobs_flag) {
      config.jobs = *jobs_flag;
    } else if (const char* env = std::getenv("CUCKOO_OPT_JOBS"); env != nullptr && *env != '\0') {
      config.jobs = parse_jobs(env, "CUCKOO_OPT_JOBS");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << config_path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  auto& spec = config.experiment;
  spec.output_path = config.out_dir;
  const auto records = bench::run_experiment(spec, config.jobs);

  try {
    const fs::path dir(config.out_dir);
    fs::create_directories(dir);
    std::ostringstream csv;
    report::write_results_csv(csv, spec, records);
    write_text(dir / "results.csv", csv.str());
    for (const auto& r : records) {
      if (r.status != bench::TrialStatus::ok) continue;
      std::ostringstream trace;
      report::write_trace_csv(trace, r);
      write_text(dir / ("trace_" + std::to_string(r.seed) + ".csv"), trace.str());
    }
    if (config.plot) write_text(dir / "convergence.svg", report::render_convergence_svg(spec, records));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  std::vector<bench::TrialRecord> ok;
  for (const auto& r : records) {
    if (r.status == bench::TrialStatus::ok) {
      ok.push_back(r);
    } else {
      err << "trial seed " << r.seed << " failed: " << r.error << "\n";
    }
  }
  out << "benchmark " << spec.benchmark << " D=" << spec.dimension << " variant "
      << to_string(spec.params.variant.kind()) << ": " << ok.size() << "/" << records.size() << " trials ok\n";
  if (!ok.empty()) {
    const auto s = bench::summarize(ok);
    out << "final_best min " << report::format_real(s.min) << " median " << report::format_real(s.median)
        << " mean " << report::format_real(s.mean) << " max " << report::format_real(s.max) << " iqr "
        << report::format_real(s.iqr) << "\n";
  }
  out << "results written to " << (fs::path(config.out_dir) / "results.csv").string() << "\n";
  return ok.size() == records.size() ? kExitOk : kExitRuntime;
}

}  // namespace

int run_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seeded cuckoo-search experiments", "cuckoo-opt"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "cuckoo_out";
  std::size_t jobs = 1;
  bool plot = false;
  auto* run = app.add_subcommand("run", "run the experiment described by a JSON config");
  run->add_option("--config", config_path, "experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* jobs_opt = run->add_option("--jobs", jobs, "parallel trials (default: CUCKOO_OPT_JOBS or 1)")
                       ->check(CLI::PositiveNumber);
  run->add_flag("--plot", plot, "also write convergence.svg");

  auto* list = app.add_subcommand("list-benchmarks", "print available benchmark names");
  auto* version = app.add_subcommand("version", "print the version");

  if (!args.empty()) args.erase(args.begin());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*version) {
      out << "cuckoo-opt " << kVersion << "\n";
      return kExitOk;
    }
    if (*list) {
      for (const auto& info : bench::benchmark_catalog()) out << info.name << "\n";
      return kExitOk;
    }
    std::optional<std::size_t> jobs_flag;
    if (jobs_opt->count() > 0) jobs_flag = jobs;
    return command_run(config_path, out_dir, jobs_flag, plot, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace cuckoo::cli
