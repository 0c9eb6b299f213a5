#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qpert/bound_state_models.hpp"
#include "qpert_cli/table.hpp"

namespace qpert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kToleranceFailure = 2,
  kIoError = 3,
};

/// Table plus the messages destined for the diagnostic stream.
struct CommandResult {
  Table table;
  std::vector<std::string> diagnostics;
  int exit_code = kSuccess;
};

CommandResult sigma_command(ModelKind model, int n, const std::vector<double>& alphas, int max_order);
CommandResult hydrogen_table_command(double alphaw_eV, int n_max, double rydberg_eV);
CommandResult levels_command(const std::vector<int>& n_list, int samples, double rydberg_eV);
CommandResult oracle_command(ModelKind model, int n, double alpha, int grid_points, int order, double tolerance);
CommandResult series_command(double e0, double w_modulus, double alpha, int max_order);

/// Parses a decimal number or a fraction "p/q" (e.g. "1/18").
std::optional<double> parse_number(std::string_view text);

/// Writes `content` to `path` through a temporary file in the same
/// directory and a rename, so readers never see a partial file.
/// Throws std::runtime_error on failure.
void write_atomically(const std::string& path, const std::string& content);

/// Entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpert::cli
