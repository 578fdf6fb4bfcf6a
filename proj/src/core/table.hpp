// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mco {

// One tabular value; monostate renders as an empty CSV field.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);

  // RFC 4180: CRLF line ends, header row first, fields quoted only when
  // they contain a comma, quote or line break. Numbers render in shortest
  // round-trip form with a '.' decimal point regardless of locale.
  std::string to_csv() const;
};

// Splits CSV text into raw string fields, honoring quoting; the header row
// is element 0. Used to verify emitted files and recompute aggregates.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string csv_escape(const std::string& field);
std::string cell_text(const Cell& c);

}  // namespace mco
