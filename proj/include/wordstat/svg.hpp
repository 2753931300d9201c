#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wordstat/ratios.hpp"

namespace wordstat {

/// Minimal hand-rolled line chart: log10-scaled n axis, linear value axis,
/// one polyline per series. Output is deterministic for identical input.
inline std::string svg_chart(const std::vector<RatioSeries>& series,
                             const std::vector<std::string>& labels,
                             const std::string& title) {
  constexpr double W = 760, H = 420;
  constexpr double ML = 70, MR = 20, MT = 40, MB = 50;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const RatioSeries& s : series) {
    for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
      const double x = std::log10(static_cast<double>(s.checkpoints[i]));
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, s.ratios[i]);
      y_hi = std::max(y_hi, s.ratios[i]);
    }
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1;
  const double y_pad = 0.05 * (y_hi - y_lo);
  y_lo -= y_pad;
  y_hi += y_pad;

  auto px = [&](double logn) { return ML + (logn - x_lo) / (x_hi - x_lo) * (W - ML - MR); };
  auto py = [&](double v) { return H - MB - (v - y_lo) / (y_hi - y_lo) * (H - MT - MB); };
  auto num = [](double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.2f", v);
    return std::string(b);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"420\" "
         "viewBox=\"0 0 760 420\">\n";
  out += "<rect width=\"760\" height=\"420\" fill=\"white\"/>\n";
  out += "<text x=\"380\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">" + title + "</text>\n";
  out += "<line x1=\"" + num(ML) + "\" y1=\"" + num(H - MB) + "\" x2=\"" + num(W - MR) +
         "\" y2=\"" + num(H - MB) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(ML) + "\" y1=\"" + num(MT) + "\" x2=\"" + num(ML) + "\" y2=\"" +
         num(H - MB) + "\" stroke=\"black\"/>\n";

  // Decade ticks on the n axis.
  for (int d = static_cast<int>(std::ceil(x_lo)); d <= static_cast<int>(std::floor(x_hi)); ++d) {
    const double x = px(d);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(H - MB) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(H - MB + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(H - MB + 20) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">1e" +
           std::to_string(d) + "</text>\n";
  }
  // Value axis extremes.
  for (double v : {y_lo + y_pad, y_hi - y_pad}) {
    out += "<text x=\"" + num(ML - 6) + "\" y=\"" + num(py(v) + 4) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" +
           detail::fmt_double(v).substr(0, 9) + "</text>\n";
  }

  for (std::size_t si = 0; si < series.size(); ++si) {
    const RatioSeries& s = series[si];
    std::string pts;
    for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
      pts += num(px(std::log10(static_cast<double>(s.checkpoints[i]))));
      pts += ',';
      pts += num(py(s.ratios[i]));
      if (i + 1 < s.checkpoints.size()) pts += ' ';
    }
    const char* color = kColors[si % 4];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    if (si < labels.size()) {
      const double ly = MT + 16 * static_cast<double>(si);
      out += "<text x=\"" + num(W - MR - 8) + "\" y=\"" + num(ly) +
             "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" fill=\"";
      out += color;
      out += "\">" + labels[si] + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

} // namespace wordstat
