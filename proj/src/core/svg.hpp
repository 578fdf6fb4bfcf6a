// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <vector>

namespace mco {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), already ordered
};

// Standalone SVG line chart: axes with five ticks per side, one polyline
// per series, legend on the right. Deterministic output for identical
// input; all text is XML-escaped.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series);

}  // namespace mco
