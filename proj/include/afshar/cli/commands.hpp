#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "afshar/cli/csv.hpp"
#include "afshar/cli/run_config.hpp"

namespace afshar::cli {

/// Samples in the grid-function/fringe table, spanning [-2, 2] periods.
inline constexpr int kPatternSamples = 401;

/// n, c_n, r_n, t_n for n = 0..N.
CsvTable coefficient_table(const RunConfig& config);
/// x (in periods), G(x), I(x).
CsvTable pattern_table(const RunConfig& config);
/// Single-slit (n, P) and two-slit (m, P) spectra per selected channel.
std::vector<CsvTable> order_tables(const RunConfig& config);
/// a, V, D, duality per selected channel.
std::vector<CsvTable> sweep_tables(const RunConfig& config);

std::vector<CsvTable> tables_for(Command command, const RunConfig& config);

/// Executes one command; returns an ExitCode.
int run_command(Command command, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses argv (flags override --config file
/// values, which override defaults) and runs the selected command.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace afshar::cli
