#ifndef VMR_SVG_HPP
#define VMR_SVG_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "vmr/error.hpp"

namespace vmr {

struct PlotSeries {
  std::string label;
  std::vector<std::array<double, 2>> points;  ///< (x, y)
};

namespace detail {

inline std::string svg_num(double v, int precision = 2) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

inline std::string tick_label(double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Deterministic single-panel line plot.  With log_y the y axis shows
/// log10 of the values; non-positive y values are rejected in that mode.
inline std::string render_line_plot(const std::string& title, const std::string& x_label,
                                    const std::string& y_label, const std::vector<PlotSeries>& series,
                                    bool log_y = false) {
  if (series.empty()) throw InvalidInput("render_line_plot: no series");
  for (const auto& s : series)
    if (s.points.empty()) throw InvalidInput("render_line_plot: empty series '" + s.label + "'");

  const double width = 720, height = 480;
  const double left = 80, right = 690, top = 50, bottom = 430;
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool first = true;
  auto y_of = [&](double y) {
    if (!log_y) return y;
    if (!(y > 0)) throw InvalidInput("render_line_plot: log scale requires positive values");
    return std::log10(y);
  };
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      const double y = y_of(p[1]);
      if (first) {
        x_min = x_max = p[0];
        y_min = y_max = y;
        first = false;
      } else {
        x_min = std::min(x_min, p[0]);
        x_max = std::max(x_max, p[0]);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
      }
    }
  }
  if (x_max == x_min) {
    x_min -= 1;
    x_max += 1;
  }
  if (y_max == y_min) {
    y_min -= 1;
    y_max += 1;
  }
  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (right - left); };
  auto py = [&](double y) { return bottom - (y_of(y) - y_min) / (y_max - y_min) * (bottom - top); };

  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                            "#ff7f0e", "#8c564b"};
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(width, 0) +
         "\" height=\"" + detail::svg_num(height, 0) + "\" viewBox=\"0 0 " +
         detail::svg_num(width, 0) + " " + detail::svg_num(height, 0) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"360\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + title + "</text>\n";
  out += "<line x1=\"" + detail::svg_num(left) + "\" y1=\"" + detail::svg_num(bottom) + "\" x2=\"" +
         detail::svg_num(right) + "\" y2=\"" + detail::svg_num(bottom) +
         "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + detail::svg_num(left) + "\" y1=\"" + detail::svg_num(top) + "\" x2=\"" +
         detail::svg_num(left) + "\" y2=\"" + detail::svg_num(bottom) + "\" stroke=\"black\"/>\n";

  const int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / n_ticks;
    const double gx = px(fx);
    out += "<line x1=\"" + detail::svg_num(gx) + "\" y1=\"" + detail::svg_num(bottom) + "\" x2=\"" +
           detail::svg_num(gx) + "\" y2=\"" + detail::svg_num(bottom + 5) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + detail::svg_num(gx) + "\" y=\"" + detail::svg_num(bottom + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::tick_label(fx) + "</text>\n";
    const double fy = y_min + (y_max - y_min) * i / n_ticks;
    const double gy = bottom - (fy - y_min) / (y_max - y_min) * (bottom - top);
    out += "<line x1=\"" + detail::svg_num(left - 5) + "\" y1=\"" + detail::svg_num(gy) +
           "\" x2=\"" + detail::svg_num(left) + "\" y2=\"" + detail::svg_num(gy) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + detail::svg_num(left - 8) + "\" y=\"" + detail::svg_num(gy + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::tick_label(fy) + "</text>\n";
  }
  out += "<text x=\"385\" y=\"465\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" + x_label + "</text>\n";
  out += "<text x=\"20\" y=\"240\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 20 240)\">" +
         std::string(log_y ? "log10 " : "") + y_label + "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = palette[k % (sizeof(palette) / sizeof(palette[0]))];
    std::string pts;
    for (const auto& p : series[k].points)
      pts += detail::svg_num(px(p[0])) + "," + detail::svg_num(py(p[1])) + " ";
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" "
           "points=\"" + pts + "\"/>\n";
    out += "<text x=\"" + detail::svg_num(right - 4) + "\" y=\"" +
           detail::svg_num(top + 16 + 16 * double(k)) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + color +
           "\">" + series[k].label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace vmr

#endif  // VMR_SVG_HPP
