#include "physent/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "physent/version.hpp"

namespace physent {

namespace {

std::string fmt_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Point: return "point";
    case Command::SweepEpsilon: return "sweep-epsilon";
    case Command::SweepDlr: return "sweep-dlr";
    case Command::PresetHom: return "preset-hom";
  }
  return "?";
}

const char* format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

std::string config_echo(const RunConfig& c) {
  std::ostringstream os;
  os << "command=" << command_name(c.command) << " statistics=" << statistics_name(c.statistics);
  if (c.command != Command::SweepDlr && c.command != Command::PresetHom)
    os << " gamma_fraction=" << fmt_double(c.gamma_fraction);
  if (!c.epsilons.empty()) {
    os << " epsilon=";
    for (std::size_t i = 0; i < c.epsilons.size(); ++i)
      os << (i ? "," : "") << fmt_double(c.epsilons[i]);
  }
  if (c.command == Command::SweepEpsilon || c.command == Command::SweepDlr)
    os << " grid=" << c.grid_size;
  os << " format=" << format_name(c.format);
  return os.str();
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

MeasureReport row_report(const SweepPoint& p) {
  if (p.status == PointStatus::Ok) return *p.pipeline;
  return MeasureReport{p.t, kNan, kNan, kNan, kNan};
}

}  // namespace

std::vector<SweepPoint> evaluate(const RunConfig& config) {
  switch (config.command) {
    case Command::Point:
    case Command::PresetHom: {
      if (config.epsilons.size() != 1)
        throw InvalidParams("point evaluation needs exactly one epsilon");
      const double fraction =
          config.command == Command::PresetHom ? 1.0 : config.gamma_fraction;
      const SplitterGeometry geometry{std::numbers::pi / 4.0, std::acos(std::sqrt(fraction))};
      return {evaluate_point(geometry, config.epsilons.front(), config.statistics)};
    }
    case Command::SweepEpsilon:
      return epsilon_sweep(config.gamma_fraction, config.statistics,
                           linear_grid(0.0, std::numbers::pi, config.grid_size));
    case Command::SweepDlr:
      return dlr_sweep(config.epsilons, config.statistics,
                       linear_grid(0.0, 0.25, config.grid_size));
  }
  throw InvalidParams("unknown command");
}

void write_csv(std::ostream& os, const RunConfig& config, const std::vector<SweepPoint>& points) {
  os << "# physent " << kVersion << ' ' << config_echo(config) << '\n';
  os << "theta,eta,epsilon,delta,d_lr,d_rl,gamma,t,c_d,p_d,s_d,residual,oracle_delta_max,status\n";
  for (const SweepPoint& p : points) {
    const MeasureReport report = row_report(p);
    os << fmt_double(p.geometry.theta) << ',' << fmt_double(p.geometry.eta) << ','
       << fmt_double(p.epsilon) << ',' << exchange_sign(p.statistics) << ','
       << fmt_double(p.weights.d_lr) << ',' << fmt_double(p.weights.d_rl) << ','
       << fmt_double(p.weights.gamma.real()) << ',' << fmt_double(p.t) << ','
       << fmt_double(report.c_d) << ',' << fmt_double(report.p_d) << ','
       << fmt_double(report.s_d) << ',' << fmt_double(report.residual) << ','
       << fmt_double(p.oracle_delta_max) << ',' << status_name(p.status) << '\n';
  }
}

void write_json(std::ostream& os, const RunConfig& /*config*/,
                const std::vector<SweepPoint>& points) {
  // Non-finite values serialize as null.
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const SweepPoint& p : points) {
    const MeasureReport report = row_report(p);
    nlohmann::ordered_json record;
    record["theta"] = p.geometry.theta;
    record["eta"] = p.geometry.eta;
    record["epsilon"] = p.epsilon;
    record["delta"] = exchange_sign(p.statistics);
    record["d_lr"] = p.weights.d_lr;
    record["d_rl"] = p.weights.d_rl;
    record["gamma"] = p.weights.gamma.real();
    record["t"] = p.t;
    record["c_d"] = report.c_d;
    record["p_d"] = report.p_d;
    record["s_d"] = report.s_d;
    record["residual"] = report.residual;
    record["oracle_delta_max"] = p.oracle_delta_max;
    record["status"] = status_name(p.status);
    if (p.status == PointStatus::Ok) {
      nlohmann::ordered_json oracle;
      oracle["t"] = p.oracle->t;
      oracle["c_d"] = p.oracle->c_d;
      oracle["p_d"] = p.oracle->p_d;
      oracle["s_d"] = p.oracle->s_d;
      oracle["residual"] = p.oracle->residual;
      record["oracle"] = std::move(oracle);
    } else {
      record["oracle"] = nullptr;
    }
    records.push_back(std::move(record));
  }
  os << records.dump(2) << '\n';
}

void run(const RunConfig& config) {
  const std::vector<SweepPoint> points = evaluate(config);
  const auto write = [&](std::ostream& os) {
    if (config.format == OutputFormat::Csv)
      write_csv(os, config, points);
    else
      write_json(os, config, points);
    os.flush();
    if (!os) throw IoError("failed while writing output");
  };
  if (config.output_path.empty()) {
    write(std::cout);
  } else {
    std::ofstream file(config.output_path);
    if (!file) throw IoError("cannot open output file: " + config.output_path);
    write(file);
  }
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig config;
  std::string statistics = "boson";
  std::string format = "csv";

  CLI::App app{"physical entanglement of two identical particles at a detector pair"};
  app.name("physent");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("physent ") + kVersion);
  app.set_config("--config", "",
                 "flat key=value configuration file (# comments); flags win over file values");

  app.add_option("--statistics", statistics, "exchange statistics: boson or fermion")
      ->check(CLI::IsMember({"boson", "fermion"}))
      ->capture_default_str();
  CLI::Option* gamma_option =
      app.add_option("--gamma-fraction", config.gamma_fraction,
                     "|gamma| / gamma_max at the balanced splitter, in [0, 1]")
          ->check(CLI::Range(0.0, 1.0))
          ->capture_default_str();
  CLI::Option* epsilon_option =
      app.add_option("--epsilon", config.epsilons, "internal mixing angle(s), radians");
  app.add_option("--grid", config.grid_size, "sweep resolution (>= 2 points)")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  app.add_option("--output", config.output_path, "output file (default: stdout)");
  app.add_option("--output-format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CLI::App* cmd_point = app.add_subcommand(
      "point", "evaluate one (epsilon, gamma-fraction) point at balanced detectors");
  CLI::App* cmd_sweep_epsilon =
      app.add_subcommand("sweep-epsilon", "sweep epsilon over [0, pi] at balanced detectors");
  CLI::App* cmd_sweep_dlr = app.add_subcommand(
      "sweep-dlr", "sweep the detector bias d_lr over [0, 1/4] at gamma = -gamma_max");
  app.add_subcommand("preset-hom",
                     "balanced Hong-Ou-Mandel point: theta = pi/4, gamma = -gamma_max");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    throw UsageError(app.help(), e.get_exit_code(), true);
  } catch (const CLI::CallForAllHelp& e) {
    throw UsageError(app.help("", CLI::AppFormatMode::All), e.get_exit_code(), true);
  } catch (const CLI::CallForVersion& e) {
    throw UsageError(e.what(), e.get_exit_code(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\nRun with --help for usage.", e.get_exit_code());
  }

  if (cmd_point->parsed())
    config.command = Command::Point;
  else if (cmd_sweep_epsilon->parsed())
    config.command = Command::SweepEpsilon;
  else if (cmd_sweep_dlr->parsed())
    config.command = Command::SweepDlr;
  else
    config.command = Command::PresetHom;

  config.statistics = statistics == "boson" ? Statistics::Boson : Statistics::Fermion;
  config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

  const bool has_epsilon = epsilon_option->count() > 0;
  const bool has_gamma = gamma_option->count() > 0;
  switch (config.command) {
    case Command::Point:
      if (config.epsilons.size() != 1)
        throw UsageError("point requires exactly one --epsilon value", 2);
      break;
    case Command::PresetHom:
      if (config.epsilons.size() != 1)
        throw UsageError("preset-hom requires exactly one --epsilon value", 2);
      if (has_gamma)
        throw UsageError("preset-hom pins gamma to -gamma_max; --gamma-fraction is not allowed", 2);
      config.gamma_fraction = 1.0;
      break;
    case Command::SweepEpsilon:
      if (has_epsilon)
        throw UsageError("sweep-epsilon generates its own epsilon grid; --epsilon is not allowed",
                         2);
      break;
    case Command::SweepDlr:
      if (has_gamma)
        throw UsageError("sweep-dlr pins gamma to -gamma_max; --gamma-fraction is not allowed", 2);
      if (config.epsilons.empty())
        config.epsilons = {0.0, 3.0 * std::numbers::pi / 8.0, 5.0 * std::numbers::pi / 8.0};
      break;
  }
  return config;
}

int cli_main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    run(parse_config(args));
    return 0;
  } catch (const UsageError& e) {
    std::ostream& os = e.is_help ? std::cout : std::cerr;
    os << e.what();
    const std::string message = e.what();
    if (message.empty() || message.back() != '\n') os << '\n';
    return e.exit_code;
  } catch (const Error& e) {
    std::cerr << "physent: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace physent
