#pragma once

// Output model shared by every subcommand: a list of summary fields plus an
// optional named table, rendered as plain text, CSV, JSON or Markdown.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "movcone/arith.hpp"

namespace movcone::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Plain, Csv, Json, Markdown };

struct Cell {
  // monostate renders as null / empty.
  std::variant<std::monostate, std::string, std::int64_t, bool, Integer, Rational,
               std::vector<Rational>>
      value;

  Cell() = default;
  Cell(std::monostate) {}
  Cell(std::string s) : value(std::move(s)) {}
  Cell(const char* s) : value(std::string(s)) {}
  Cell(std::int64_t i) : value(i) {}
  Cell(int i) : value(static_cast<std::int64_t>(i)) {}
  Cell(bool b) : value(b) {}
  Cell(Integer z) : value(std::move(z)) {}
  Cell(Rational q) : value(std::move(q)) {}
  Cell(std::vector<Rational> qs) : value(std::move(qs)) {}
  template <class T>
  Cell(const std::optional<T>& maybe) {
    if (maybe) *this = Cell(*maybe);
  }

  bool is_rational() const { return std::holds_alternative<Rational>(value); }
};

using Field = std::pair<std::string, Cell>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Field> summary;
  std::optional<Table> table;
};

struct RenderOptions {
  OutputFormat format = OutputFormat::Plain;
  unsigned precision = 3;
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline Json rational_json(const Rational& q, unsigned precision) {
  return Json{{"exact", to_fraction_string(q)}, {"decimal", to_decimal(q, precision)}};
}

inline Json to_json(const Cell& cell, unsigned precision) {
  return std::visit(
      [precision](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Integer>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return rational_json(v, precision);
        } else if constexpr (std::is_same_v<T, std::vector<Rational>>) {
          Json arr = Json::array();
          for (const Rational& q : v) arr.push_back(rational_json(q, precision));
          return arr;
        } else {
          return v;
        }
      },
      cell.value);
}

/// Exact text of a cell; rationals as p/q.
inline std::string exact_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Integer>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_fraction_string(v);
        } else {
          std::vector<std::string> parts;
          for (const Rational& q : v) parts.push_back(to_fraction_string(q));
          return join(parts, " ");
        }
      },
      cell.value);
}

/// Human text: rationals as "p/q (decimal)", lists comma separated, null as "-".
inline std::string display_text(const Cell& cell, unsigned precision) {
  if (std::holds_alternative<std::monostate>(cell.value)) return "-";
  if (const auto* q = std::get_if<Rational>(&cell.value)) {
    if (q->get_den() == 1) return to_fraction_string(*q);
    return to_fraction_string(*q) + " (" + to_decimal(*q, precision) + ")";
  }
  if (const auto* qs = std::get_if<std::vector<Rational>>(&cell.value)) {
    if (qs->empty()) return "-";
    std::vector<std::string> parts;
    for (const Rational& q : *qs) parts.push_back(to_fraction_string(q));
    return join(parts, ", ");
  }
  return exact_text(cell);
}

inline std::string decimal_text(const Cell& cell, unsigned precision) {
  if (const auto* q = std::get_if<Rational>(&cell.value)) return to_decimal(*q, precision);
  if (const auto* qs = std::get_if<std::vector<Rational>>(&cell.value)) {
    std::vector<std::string> parts;
    for (const Rational& q : *qs) parts.push_back(to_decimal(q, precision));
    return join(parts, " ");
  }
  return "";
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline bool column_has_rationals(const Table& table, std::size_t col) {
  for (const auto& row : table.rows) {
    const auto& v = row[col].value;
    if (std::holds_alternative<Rational>(v) || std::holds_alternative<std::vector<Rational>>(v)) {
      return true;
    }
  }
  return false;
}

inline void render_aligned(std::ostream& os, const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) text += "  ";
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size(), ' ');
    }
    os << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

}  // namespace detail

inline Json to_json(const Report& report, unsigned precision) {
  Json doc;
  doc["command"] = report.command;
  Json inputs = Json::object();
  for (const auto& [key, cell] : report.inputs) inputs[key] = detail::to_json(cell, precision);
  doc["inputs"] = std::move(inputs);
  Json results = Json::object();
  for (const auto& [key, cell] : report.summary) results[key] = detail::to_json(cell, precision);
  if (report.table) {
    Json rows = Json::array();
    for (const auto& row : report.table->rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < row.size(); ++c) {
        obj[report.table->columns[c]] = detail::to_json(row[c], precision);
      }
      rows.push_back(std::move(obj));
    }
    results[report.table->name] = std::move(rows);
  }
  doc["results"] = std::move(results);
  return doc;
}

inline std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

inline void render_csv(std::ostream& os, const Report& report, unsigned precision) {
  // The table if there is one, otherwise the summary as a single row.
  Table table;
  if (report.table) {
    table = *report.table;
  } else {
    table.rows.emplace_back();
    for (const auto& [key, cell] : report.summary) {
      table.columns.push_back(key);
      table.rows.back().push_back(cell);
    }
  }
  std::vector<bool> with_decimal(table.columns.size());
  std::vector<std::string> header;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    with_decimal[c] = detail::column_has_rationals(table, c);
    header.push_back(detail::csv_escape(table.columns[c]));
    if (with_decimal[c]) header.push_back(detail::csv_escape(table.columns[c] + "_decimal"));
  }
  os << detail::join(header, ",") << '\n';
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    for (std::size_t c = 0; c < row.size(); ++c) {
      fields.push_back(detail::csv_escape(detail::exact_text(row[c])));
      if (with_decimal[c]) fields.push_back(detail::csv_escape(detail::decimal_text(row[c], precision)));
    }
    os << detail::join(fields, ",") << '\n';
  }
}

inline void render_plain(std::ostream& os, const Report& report, unsigned precision) {
  std::size_t key_width = 0;
  for (const auto& [key, cell] : report.summary) key_width = std::max(key_width, key.size());
  for (const auto& [key, cell] : report.summary) {
    os << key << ':' << std::string(key_width - key.size() + 1, ' ')
       << detail::display_text(cell, precision) << '\n';
  }
  if (!report.table) return;
  if (!report.summary.empty()) os << '\n';
  if (report.table->rows.empty()) {
    os << report.table->name << ": (none)\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : report.table->rows) {
    std::vector<std::string> cells;
    for (const auto& cell : row) cells.push_back(detail::display_text(cell, precision));
    rows.push_back(std::move(cells));
  }
  detail::render_aligned(os, report.table->columns, rows);
}

inline void render_markdown(std::ostream& os, const Report& report, unsigned precision) {
  os << "### " << report.command << "\n\n";
  auto escape = [](std::string text) {
    std::string out;
    for (char c : text) {
      if (c == '|') out += '\\';
      out += c;
    }
    return out;
  };
  if (!report.summary.empty()) {
    os << "| field | value |\n|---|---|\n";
    for (const auto& [key, cell] : report.summary) {
      os << "| " << escape(key) << " | " << escape(detail::display_text(cell, precision)) << " |\n";
    }
  }
  if (!report.table) return;
  if (!report.summary.empty()) os << '\n';
  os << '|';
  for (const auto& col : report.table->columns) os << ' ' << escape(col) << " |";
  os << "\n|";
  for (std::size_t c = 0; c < report.table->columns.size(); ++c) os << "---|";
  os << '\n';
  for (const auto& row : report.table->rows) {
    os << '|';
    for (const auto& cell : row) os << ' ' << escape(detail::display_text(cell, precision)) << " |";
    os << '\n';
  }
}

inline void render(std::ostream& os, const Report& report, const RenderOptions& options) {
  switch (options.format) {
    case OutputFormat::Plain: render_plain(os, report, options.precision); break;
    case OutputFormat::Csv: render_csv(os, report, options.precision); break;
    case OutputFormat::Json: os << render_json(to_json(report, options.precision)); break;
    case OutputFormat::Markdown: render_markdown(os, report, options.precision); break;
  }
}

}  // namespace movcone::cli
