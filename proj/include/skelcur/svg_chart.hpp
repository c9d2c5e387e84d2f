#pragma once
//
// Minimal SVG line chart with a logarithmic y axis.
//

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "skelcur/error.hpp"

namespace skelcur::svg {

struct Series {
  std::string name;
  std::vector<double> y;  // one value per x; non-positive values are skipped
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline void line_chart_log_y(std::ostream& out, const std::string& title, const std::string& x_label,
                             const std::vector<double>& x, const std::vector<Series>& series) {
  detail::require(!x.empty() && !series.empty(), ErrorKind::InvalidArgument, "nothing to plot");
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const double width = 720, height = 480, left = 70, right = 200, top = 40, bottom = 50;
  const double pw = width - left - right, ph = height - top - bottom;

  double ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series)
    for (double v : s.y)
      if (v > 0.0) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
  detail::require(std::isfinite(ymin), ErrorKind::InvalidArgument, "no positive values to plot");
  const double lo = std::floor(std::log10(ymin)), hi = std::max(lo + 1.0, std::ceil(std::log10(ymax)));
  const double xmin = *std::min_element(x.begin(), x.end());
  const double xmax = std::max(xmin + 1.0, *std::max_element(x.begin(), x.end()));
  auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double v) { return top + (hi - std::log10(v)) / (hi - lo) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title
      << "</text>\n";
  // axes
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";
  for (double d = lo; d <= hi; d += 1.0) {
    const double yy = py(std::pow(10.0, d));
    out << "<line x1=\"" << left << "\" y1=\"" << fmt(yy) << "\" x2=\"" << left + pw << "\" y2=\"" << fmt(yy)
        << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << fmt(yy + 4) << "\" text-anchor=\"end\">1e" << static_cast<int>(d)
        << "</text>\n";
  }
  const int ticks = 5;
  for (int t = 0; t <= ticks; ++t) {
    const double xv = xmin + (xmax - xmin) * t / ticks;
    out << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << fmt(top + ph + 18) << "\" text-anchor=\"middle\">"
        << fmt(xv) << "</text>\n";
  }
  out << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = palette[s % std::size(palette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < x.size() && i < series[s].y.size(); ++i)
      if (series[s].y[i] > 0.0) out << fmt(px(x[i])) << ',' << fmt(py(series[s].y[i])) << ' ';
    out << "\"/>\n";
    const double ly = top + 10 + 20.0 * static_cast<double>(s);
    out << "<line x1=\"" << left + pw + 15 << "\" y1=\"" << fmt(ly) << "\" x2=\"" << left + pw + 40 << "\" y2=\""
        << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + pw + 46 << "\" y=\"" << fmt(ly + 4) << "\">" << series[s].name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace skelcur::svg
