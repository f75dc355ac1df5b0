#include "afshar/cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace afshar::cli {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string to_csv(const CsvTable& table) {
  std::string text;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) text += ',';
    text += table.columns[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_number(row[i]);
    }
    text += '\n';
  }
  return text;
}

std::filesystem::path table_path(const std::filesystem::path& out, std::string_view name) {
  std::filesystem::path path = out;
  std::string extension = path.has_extension() ? path.extension().string() : ".csv";
  path.replace_filename(path.stem().string() + "_" + std::string(name) + extension);
  return path;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_tables(std::span<const CsvTable> tables, const std::string& out,
                  std::ostream& console) {
  if (out.empty()) {
    bool first = true;
    for (const auto& table : tables) {
      if (tables.size() > 1) {
        if (!first) console << '\n';
        console << "# " << table.name << '\n';
      }
      console << to_csv(table);
      first = false;
    }
    return;
  }
  if (tables.size() == 1) {
    write_file(out, to_csv(tables.front()));
    return;
  }
  for (const auto& table : tables) write_file(table_path(out, table.name), to_csv(table));
}

}  // namespace afshar::cli
