// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/table.hpp"

#include "core/errors.hpp"
#include "core/format.hpp"

namespace mco {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw InvalidArgumentError("row width " + format_u64(row.size()) +
                               " does not match column count " +
                               format_u64(columns.size()));
  rows.push_back(std::move(row));
}

std::string cell_text(const Cell& c) {
  switch (c.index()) {
    case 0: return "";
    case 1: return format_i64(std::get<std::int64_t>(c));
    case 2: return format_double(std::get<double>(c));
    default: return std::get<std::string>(c);
  }
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(columns[i]);
  }
  out += "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cell_text(row[i]));
    }
    out += "\r\n";
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_open = false;  // true once the current record has any content
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        field_open = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_open = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        field_open = false;
        break;
      default:
        field += c;
        field_open = true;
        break;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  if (field_open || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace mco
