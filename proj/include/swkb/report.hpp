#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swkb::report {

enum class Format { table, json, csv };

Format parse_format(std::string_view tag);

// A report cell. monostate renders as null (json), empty (csv) or "-" (table).
using Cell = std::variant<std::monostate, long long, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Table: 10 significant digits in scientific notation. JSON/CSV: 17
// significant digits (round-trip safe). Locale independent.
std::string format_number(double v, Format format);

void emit_report(const Table& table, Format format, std::ostream& out);

/// Writes to `path` when given, else to `out`. Throws IoError when the file
/// cannot be opened.
void emit_report(const Table& table, Format format, const std::optional<std::string>& path,
                 std::ostream& out);

}  // namespace swkb::report
