#pragma once

// Tabular output.  Columns are fixed per table, floats print with 12
// significant digits, and CSV always carries a header row.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "charsum/experiments/config.hpp"

namespace charsum::experiments {

/// Raised when output cannot be written; the CLI maps it to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::monostate, i64, u64, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("Table::add: row width does not match columns");
    rows.push_back(std::move(row));
  }
};

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(i64 v) const { return std::to_string(v); }
    std::string operator()(u64 v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + '"';
    }
  };
  return std::visit(Visitor{}, c);
}

inline void write_csv(const Table& t, std::ostream& out) {
  std::string buf;
  auto line = [&](const auto& cells, auto&& fmt) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) buf += ',';
      buf += fmt(cells[i]);
    }
    buf += '\n';
  };
  line(t.columns, [](const std::string& s) { return format_cell(Cell{s}); });
  for (const auto& row : t.rows) {
    line(row, [](const Cell& c) { return format_cell(c); });
    if (buf.size() > (1U << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

inline nlohmann::json cell_to_json(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(i64 v) const { return v; }
    nlohmann::json operator()(u64 v) const { return v; }
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return format_double(v);
      // Round through the 12-digit text so JSON and CSV agree.
      return std::stod(format_double(v));
    }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

/// {"columns": [...], "rows": [[...], ...]}
inline nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_to_json(c));
    rows.push_back(std::move(r));
  }
  return {{"columns", t.columns}, {"rows", std::move(rows)}};
}

inline Table table_from_json(const nlohmann::json& j) {
  Table t;
  j.at("columns").get_to(t.columns);
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& v : r) {
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (v.is_number_unsigned()) {
        row.emplace_back(v.get<u64>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<i64>());
      } else if (v.is_number_float()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    t.add(std::move(row));
  }
  return t;
}

inline void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

inline std::string render(const Table& t, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(t).dump(2) + "\n";
  std::ostringstream s;
  write_csv(t, s);
  return s.str();
}

/// Writes `t` to `path` (stdout when empty).
inline void emit(const Table& t, const std::string& path, OutputFormat format) {
  write_text(render(t, format), path);
}

/// Sibling path for a secondary table: out.csv -> out.<tag>.csv.
inline std::string sibling_path(const std::string& path, const std::string& tag) {
  if (path.empty()) return {};
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "." + tag;
  return path.substr(0, dot) + "." + tag + path.substr(dot);
}

}  // namespace charsum::experiments
