#include "sesim/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <set>

#include "sesim/reporting.hpp"

namespace sesim {

namespace {

namespace fs = std::filesystem;

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw RangeError("--format", "must be csv or json");
}

Horizon parse_years(const std::string& s) {
  static const std::regex re(R"((\d{4}):(\d{4}))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw SchemaError("--years", "expected <start:end>");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw InputError("cannot create output directory " + dir.string());
}

struct RunOptions {
  std::string calibration;
  std::vector<std::string> scenarios;
  std::string out;
  std::string format = "csv";
  std::string years;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  const auto cal = parse_calibration(o.calibration);
  std::vector<ScenarioSpec> specs;
  std::set<std::string> names;
  for (const auto& path : o.scenarios) {
    auto spec = load_scenario(path);
    if (!o.years.empty()) spec.horizon = parse_years(o.years);
    try {
      validate_scenario(spec);
      check_horizon(cal, spec);
    } catch (Error& e) {
      e.add_context(path);
      throw;
    }
    if (!names.insert(spec.name).second)
      throw SchemaError("name", "scenario name '" + spec.name + "' given twice");
    specs.push_back(std::move(spec));
  }
  ensure_dir(o.out);

  std::vector<Trajectory> trajectories;
  for (const auto& spec : specs) {
    auto t = run_scenario(spec, cal);
    for (const auto& p : emit_scenario(t, o.out, format)) out << p.string() << '\n';
    const auto traj = fs::path(o.out) / (t.scenario + ".traj");
    save_trajectory(t, traj);
    out << traj.string() << '\n';
    trajectories.push_back(std::move(t));
  }
  if (trajectories.size() >= 2) {
    const auto c = compare(trajectories);
    for (const auto& p : emit_comparison(c, o.out, format)) out << p.string() << '\n';
  }
  return 0;
}

int cmd_compare(const std::vector<std::string>& files, const std::string& dir,
                const std::string& fmt, std::ostream& out) {
  const auto format = parse_format(fmt);
  std::vector<Trajectory> ts;
  for (const auto& f : files) ts.push_back(load_trajectory(f));
  const auto c = compare(ts);
  ensure_dir(dir);
  for (const auto& p : emit_comparison(c, dir, format)) out << p.string() << '\n';
  for (const auto& [var, order] : c.ranking) {
    out << var << ':';
    for (const auto& s : order) out << ' ' << s;
    out << '\n';
  }
  return 0;
}

int cmd_validate(const std::string& calibration, const std::vector<std::string>& scenarios,
                 const std::string& years, std::ostream& out) {
  std::optional<Calibration> cal;
  if (!calibration.empty()) {
    cal = parse_calibration(calibration);
    out << calibration << ": ok (" << cal->fingerprint << ")\n";
  }
  for (const auto& path : scenarios) {
    auto spec = load_scenario(path);
    if (!years.empty()) spec.horizon = parse_years(years);
    try {
      validate_scenario(spec);
      if (cal) check_horizon(*cal, spec);
    } catch (Error& e) {
      e.add_context(path);
      throw;
    }
    out << path << ": ok\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Socio-ecological scenario simulator"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run scenarios and write time series");
  run_cmd->add_option("--calibration", run.calibration, "Calibration bundle directory")
      ->required();
  run_cmd->add_option("--scenario", run.scenarios, "Scenario file (repeatable)")->required();
  run_cmd->add_option("--out", run.out, "Output directory")->required();
  run_cmd->add_option("--format", run.format, "csv or json");
  run_cmd->add_option("--years", run.years, "Horizon override <start:end>");

  std::vector<std::string> traj_files;
  std::string cmp_out, cmp_format = "csv";
  auto* cmp_cmd = app.add_subcommand("compare", "Compare saved trajectories");
  cmp_cmd->add_option("trajectories", traj_files, ".traj files")->required()->expected(2, -1);
  cmp_cmd->add_option("--out", cmp_out, "Output directory")->required();
  cmp_cmd->add_option("--format", cmp_format, "csv or json");

  std::string val_cal, val_years;
  std::vector<std::string> val_scen;
  auto* val_cmd = app.add_subcommand("validate", "Parse and check inputs without running");
  val_cmd->add_option("--calibration", val_cal, "Calibration bundle directory");
  val_cmd->add_option("--scenario", val_scen, "Scenario file (repeatable)");
  val_cmd->add_option("--years", val_years, "Horizon override <start:end>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*cmp_cmd) return cmd_compare(traj_files, cmp_out, cmp_format, out);
    if (val_cal.empty() && val_scen.empty()) {
      err << "error: validate needs --calibration and/or --scenario\n";
      return kExitInputError;
    }
    return cmd_validate(val_cal, val_scen, val_years, out);
  } catch (const SimulationError& e) {
    err << "simulation error: " << e.what() << '\n';
    return kExitSimulationError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace sesim
