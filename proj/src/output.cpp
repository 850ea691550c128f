#include "deplen/output.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "deplen/error.hpp"

namespace deplen::output {

std::string to_string(Format format) { return format == Format::csv ? "csv" : "json"; }

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json Table::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
      std::visit([&](const auto& v) { obj[columns[i]] = v; }, row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
}

std::string write_file(const std::string& dir, const std::string& name, const std::string& text) {
  ensure_directory(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
  return path;
}

std::string write_table(const std::string& dir, const std::string& stem, const Table& table, Format format) {
  if (format == Format::csv) return write_file(dir, stem + ".csv", table.to_csv());
  return write_file(dir, stem + ".json", table.to_json().dump(2) + "\n");
}

std::string write_json(const std::string& dir, const std::string& name, const nlohmann::ordered_json& doc) {
  return write_file(dir, name, doc.dump(2) + "\n");
}

}  // namespace deplen::output
