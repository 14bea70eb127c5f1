#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bhcli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct Cell {
  int n = 1;
  int k = 1;
  double c = 1.0;
};

struct RunConfig {
  std::string command;
  int n = 1;
  int k = 1;
  double c = 2.0;
  int m = 1;
  /// Output directory; empty writes the primary document to stdout.
  std::string out;
  /// json, csv or svg; empty selects the command's default.
  std::string format;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<double> seed_eps;
  int N = 4096;
  double T = 10.0;
  double L = 60.0;
  int snapshot_stride = 0;
  std::optional<std::pair<double, double>> xi_range;
  /// Sweep grid "n:k:c,n:k:c"; nullopt selects the twelve representative cells.
  std::optional<std::string> cells;
};

struct OutputFile {
  std::string name;
  std::string content;
};

struct CommandOutput {
  int exit_code = kExitOk;
  /// First entry is the primary document.
  std::vector<OutputFile> files;
  std::string summary;
};

/// Representative (n, k, c) for each of the twelve portrait classes.
std::vector<Cell> default_cells();

/// Parses "n:k:c,..." ; an empty string yields no cells. Throws bh::ConfigError.
std::vector<Cell> parse_cells(const std::string& spec);

/// Default --format of a command.
std::string default_format(const std::string& command);

/// Throws bh::ConfigError / bh::ParameterError for invalid combinations.
void validate(const RunConfig& cfg);

/// Effective configuration as "key = value" lines.
std::string show_config(const RunConfig& cfg);

CommandOutput cmd_analyze(const RunConfig& cfg);
CommandOutput cmd_portrait(const RunConfig& cfg);
CommandOutput cmd_wave(const RunConfig& cfg);
CommandOutput cmd_pde_check(const RunConfig& cfg);
CommandOutput cmd_sweep(const RunConfig& cfg);

/// Validates and dispatches on cfg.command; library exceptions become exit codes
/// with a single-line reason in `error`.
CommandOutput run(const RunConfig& cfg, std::string& error);

/// %.17g formatting used by every CSV writer.
std::string fmt17(double v);

}  // namespace bhcli
