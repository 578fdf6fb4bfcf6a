// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/svg.hpp"

#include <algorithm>
#include <cmath>

#include "core/format.hpp"

namespace mco {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 660.0;   // plot area right edge; legend lives beyond
constexpr double kTop = 50.0;
constexpr double kBottom = 460.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c; break;
    }
  }
  return out;
}

// Two decimals is plenty for pixel coordinates and keeps files compact.
std::string px(double v) { return format_double(std::round(v * 100.0) / 100.0); }

struct Range {
  double lo = 0.0, hi = 1.0;
  void widen(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

Range span(const std::vector<Series>& series, bool y_axis) {
  bool any = false;
  Range r;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      const double v = y_axis ? y : x;
      if (!any) {
        r.lo = r.hi = v;
        any = true;
      } else {
        r.widen(v);
      }
    }
  if (!any) return r;
  if (r.lo == r.hi) {  // degenerate span: pad so the line sits mid-plot
    const double pad = r.lo == 0.0 ? 1.0 : std::abs(r.lo) * 0.5;
    r.lo -= pad;
    r.hi += pad;
  }
  return r;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
  const Range xr = span(series, false);
  const Range yr = span(series, true);
  auto to_x = [&](double v) {
    return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
  };
  auto to_y = [&](double v) {
    return kBottom - (v - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) +
         "\" height=\"" + px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " +
         px(kHeight) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + px(kWidth) + "\" height=\"" +
         px(kHeight) + "\" fill=\"white\"/>\n";
  out += "<text x=\"" + px((kLeft + kRight) / 2) +
         "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" "
         "text-anchor=\"middle\">" + escape(title) + "</text>\n";

  // Axes and ticks.
  out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kBottom) + "\" x2=\"" +
         px(kRight) + "\" y2=\"" + px(kBottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kTop) + "\" x2=\"" +
         px(kLeft) + "\" y2=\"" + px(kBottom) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double tx = to_x(fx);
    const double ty = to_y(fy);
    out += "<line x1=\"" + px(tx) + "\" y1=\"" + px(kBottom) + "\" x2=\"" +
           px(tx) + "\" y2=\"" + px(kBottom + 6) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + px(tx) + "\" y=\"" + px(kBottom + 22) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           escape(format_double(fx)) + "</text>\n";
    out += "<line x1=\"" + px(kLeft - 6) + "\" y1=\"" + px(ty) + "\" x2=\"" +
           px(kLeft) + "\" y2=\"" + px(ty) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + px(kLeft - 10) + "\" y=\"" + px(ty + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
           escape(format_double(fy)) + "</text>\n";
  }
  out += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"" + px(kHeight - 14) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
         escape(x_label) + "</text>\n";
  out += "<text x=\"20\" y=\"" + px((kTop + kBottom) / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 20 " + px((kTop + kBottom) / 2) + ")\">" +
         escape(y_label) + "</text>\n";

  // Series lines and legend.
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (!series[k].points.empty()) {
      out += "<polyline fill=\"none\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"1.6\" points=\"";
      bool first = true;
      for (const auto& [x, y] : series[k].points) {
        if (!first) out += ' ';
        first = false;
        out += px(to_x(x)) + "," + px(to_y(y));
      }
      out += "\"/>\n";
    }
    const double ly = kTop + 18.0 * static_cast<double>(k);
    out += "<line x1=\"" + px(kRight + 16) + "\" y1=\"" + px(ly) + "\" x2=\"" +
           px(kRight + 44) + "\" y2=\"" + px(ly) + "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.6\"/>\n";
    out += "<text x=\"" + px(kRight + 50) + "\" y=\"" + px(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" +
           escape(series[k].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mco
