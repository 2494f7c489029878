#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scalefv::cli {

struct Overrides {
  std::optional<int> cells;
  std::optional<double> cfl;
  std::optional<double> alpha;
  std::optional<double> t_final;
  std::optional<double> tol;
  std::optional<int> max_iters;
  std::optional<int> ref_cells;
};

struct CliCommand {
  enum class Kind { Run, Iterate, Table, Hypotheses };
  Kind kind = Kind::Run;
  std::string model;
  Overrides overrides;
  std::string out_path;  // empty means the per-command default
  double q_min = -3.0;
  double q_max = 3.0;
  int samples = 601;
};

/// Raised for anything the argument parser rejects; the message names the
/// offending token or flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the user asked for help; text is the full help screen.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses everything after the program name.
CliCommand parse_args(const std::vector<std::string>& args);

/// Runs one parsed command. Returns 0 on success and 3 when the scaling
/// iteration fails to converge; solver errors propagate as exceptions.
int execute(const CliCommand& cmd);

/// Full entry point: parse, execute, map errors to exit codes
/// (0 success, 1 usage, 2 numerical failure, 3 no convergence).
int run_cli(const std::vector<std::string>& args);

}  // namespace scalefv::cli
