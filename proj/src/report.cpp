#include "swkb/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <type_traits>

#include <json.hpp>

#include "swkb/error.hpp"

namespace swkb::report {

namespace {

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt, precision);
  return std::string(buf, res.ptr);
}

std::string render(const Cell& cell, Format format) {
  return std::visit(
      [format](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return format == Format::json ? "null" : format == Format::csv ? "" : "-";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v) && format == Format::json) return "null";
          return format_number(v, format);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          if (format == Format::json) return nlohmann::json(v).dump();
          if (format == Format::csv && v.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : v) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            return quoted + "\"";
          }
          return v;
        }
      },
      cell);
}

void emit_json(const Table& t, std::ostream& out) {
  out << "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << (r == 0 ? "\n  {" : ",\n  {");
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c > 0) out << ", ";
      out << nlohmann::json(t.columns[c]).dump() << ": " << render(t.rows[r][c], Format::json);
    }
    out << "}";
  }
  out << "\n]\n";
}

void emit_csv(const Table& t, std::ostream& out) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << render(row[c], Format::csv);
    out << "\n";
  }
}

void emit_table(const Table& t, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(render(row[c], Format::table));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit_line = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << "\n";
  };
  emit_line(t.columns);
  for (const auto& line : cells) emit_line(line);
}

}  // namespace

Format parse_format(std::string_view tag) {
  if (tag == "table") return Format::table;
  if (tag == "json") return Format::json;
  if (tag == "csv") return Format::csv;
  throw ParameterError("unknown output format '" + std::string(tag) + "'; use table, json or csv");
}

std::string format_number(double v, Format format) {
  if (format == Format::table) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    return to_chars_string(v, std::chars_format::scientific, 9);
  }
  return to_chars_string(v, std::chars_format::general, 17);
}

void emit_report(const Table& table, Format format, std::ostream& out) {
  if (table.rows.empty()) throw ParameterError("report has no rows");
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw ParameterError("report row width does not match the header");
    }
  }
  switch (format) {
    case Format::table:
      emit_table(table, out);
      break;
    case Format::json:
      emit_json(table, out);
      break;
    case Format::csv:
      emit_csv(table, out);
      break;
  }
}

void emit_report(const Table& table, Format format, const std::optional<std::string>& path,
                 std::ostream& out) {
  if (!path) {
    emit_report(table, format, out);
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + *path + "' for writing");
  emit_report(table, format, file);
  if (!file.flush()) throw IoError("failed writing '" + *path + "'");
}

}  // namespace swkb::report
