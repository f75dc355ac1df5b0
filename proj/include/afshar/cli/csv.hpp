#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace afshar::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CsvTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 12 significant digits, lowercase scientific below 1e-4. Negative zero
/// prints as 0.
std::string format_number(double value);

/// Header row plus one line per row, '\n' terminated.
std::string to_csv(const CsvTable& table);

/// File for `name` when a command emits several tables: foo.csv becomes
/// foo_<name>.csv.
std::filesystem::path table_path(const std::filesystem::path& out, std::string_view name);

/// A single table goes to `out` verbatim; several go to table_path(out, name).
/// An empty `out` prints everything to `console`, naming each table in a
/// '#' line when there is more than one. Throws IoError.
void write_tables(std::span<const CsvTable> tables, const std::string& out,
                  std::ostream& console);

}  // namespace afshar::cli
