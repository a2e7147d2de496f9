#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "physent/scenarios.hpp"

namespace physent {

enum class Command { Point, SweepEpsilon, SweepDlr, PresetHom };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Point;
  Statistics statistics = Statistics::Boson;
  double gamma_fraction = 1.0;
  std::vector<double> epsilons;  // exactly one value for point / preset-hom
  int grid_size = 201;
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::Csv;
};

// Bad flags or flag combinations; message is ready to print.
struct UsageError : Error {
  UsageError(const std::string& msg, int code, bool help = false)
      : Error(msg), exit_code(code), is_help(help) {}
  int exit_code;
  bool is_help;
};

// argv-style arguments without the program name. A flat key=value file given
// via --config is merged in with lower precedence than flags.
RunConfig parse_config(const std::vector<std::string>& args);

std::vector<SweepPoint> evaluate(const RunConfig& config);

void write_csv(std::ostream& os, const RunConfig& config, const std::vector<SweepPoint>& points);
void write_json(std::ostream& os, const RunConfig& config, const std::vector<SweepPoint>& points);

// Evaluates and writes to config.output_path (stdout when empty).
void run(const RunConfig& config);

int cli_main(int argc, char** argv);

}  // namespace physent
