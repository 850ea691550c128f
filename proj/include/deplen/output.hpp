#pragma once

// Plot-ready output files. CSV numbers use 17 significant digits through
// std::to_chars, so they round-trip and ignore the global locale.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace deplen::output {

enum class Format { csv, json };

std::string to_string(Format format);

std::string format_number(double value);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;  // array of row objects
};

// Creates the directory (and parents). Throws IoError.
void ensure_directory(const std::string& dir);

// Writes the text to dir/name and returns the path. Throws IoError.
std::string write_file(const std::string& dir, const std::string& name, const std::string& text);

// Writes `stem.csv` or `stem.json` according to the format.
std::string write_table(const std::string& dir, const std::string& stem, const Table& table, Format format);

std::string write_json(const std::string& dir, const std::string& name, const nlohmann::ordered_json& doc);

}  // namespace deplen::output
