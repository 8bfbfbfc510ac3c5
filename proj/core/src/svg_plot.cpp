#include "uam/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "uam/errors.hpp"

namespace uam {

namespace {

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 34;
constexpr int kMarginBottom = 40;
constexpr int kTitleBand = 26;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  double span() const { return hi - lo; }
};

Range data_range(const std::vector<PlotSeries>& series, bool use_y) {
  Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const PlotSeries& s : series) {
    const std::vector<double>& v = use_y ? s.y : s.x;
    for (double value : v) {
      if (!std::isfinite(value)) continue;
      r.lo = std::min(r.lo, value);
      r.hi = std::max(r.hi, value);
    }
  }
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) return {0.0, 1.0};
  if (r.hi - r.lo < 1e-12) {
    const double pad = std::max(1e-6, std::abs(r.hi) * 0.1);
    return {r.lo - pad, r.hi + pad};
  }
  return r;
}

// 1-2-5 tick ladder
std::vector<double> ticks(const Range& r, int target = 5) {
  const double raw = r.span() / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  }
  std::vector<double> out;
  const double first = std::ceil(r.lo / step) * step;
  for (double v = first; v <= r.hi + step * 1e-9; v += step) {
    out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  }
  return out;
}

}  // namespace

const std::string& plot_color(std::size_t index) {
  static const std::array<std::string, 6> palette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
  return palette[index % palette.size()];
}

void write_svg_panels(const std::string& path, const std::string& title,
                      const std::vector<PlotPanel>& panels, int width, int panel_height) {
  const int total_h = kTitleBand + panel_height * static_cast<int>(panels.size());
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(total_h) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"18\" text-anchor=\"middle\" "
         "font-size=\"14\">" + xml_escape(title) + "</text>\n";

  int panel_idx = 0;
  for (const PlotPanel& panel : panels) {
    const int top = kTitleBand + panel_idx * panel_height;
    const double px = kMarginLeft;
    const double py = top + kMarginTop;
    const double pw = width - kMarginLeft - kMarginRight;
    const double ph = panel_height - kMarginTop - kMarginBottom;

    const Range xr = data_range(panel.series, false);
    Range yr = panel.has_y_range ? Range{panel.y_min, panel.y_max}
                                 : data_range(panel.series, true);

    const auto map_x = [&](double v) { return px + (v - xr.lo) / xr.span() * pw; };
    const auto map_y = [&](double v) { return py + ph - (v - yr.lo) / yr.span() * ph; };

    const std::string clip_id = "clip" + std::to_string(panel_idx);
    svg += "<clipPath id=\"" + clip_id + "\"><rect x=\"" + num(px) + "\" y=\"" + num(py) +
           "\" width=\"" + num(pw) + "\" height=\"" + num(ph) + "\"/></clipPath>\n";

    svg += "<text x=\"" + num(px) + "\" y=\"" + num(top + 20) + "\" font-size=\"12\">" +
           xml_escape(panel.title) + "</text>\n";

    // grid and tick labels
    for (double tx : ticks(xr)) {
      const double gx = map_x(tx);
      svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(py) + "\" x2=\"" + num(gx) +
             "\" y2=\"" + num(py + ph) + "\" stroke=\"#e0e0e0\"/>\n";
      svg += "<text x=\"" + num(gx) + "\" y=\"" + num(py + ph + 14) +
             "\" text-anchor=\"middle\" font-size=\"10\">" + num(tx) + "</text>\n";
    }
    for (double ty : ticks(yr)) {
      const double gy = map_y(ty);
      svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(gy) + "\" x2=\"" + num(px + pw) +
             "\" y2=\"" + num(gy) + "\" stroke=\"#e0e0e0\"/>\n";
      svg += "<text x=\"" + num(px - 6) + "\" y=\"" + num(gy + 3) +
             "\" text-anchor=\"end\" font-size=\"10\">" + num(ty) + "</text>\n";
    }
    svg += "<rect x=\"" + num(px) + "\" y=\"" + num(py) + "\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#333333\"/>\n";

    // axis labels
    svg += "<text x=\"" + num(px + pw / 2) + "\" y=\"" + num(py + ph + 30) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + xml_escape(panel.x_label) +
           "</text>\n";
    svg += "<text x=\"" + num(px - 48) + "\" y=\"" + num(py + ph / 2) +
           "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 " +
           num(px - 48) + " " + num(py + ph / 2) + ")\">" + xml_escape(panel.y_label) +
           "</text>\n";

    for (const PlotSeries& s : panel.series) {
      if (s.x.empty()) continue;
      std::string pts;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        pts += num(map_x(s.x[i])) + "," + num(map_y(s.y[i])) + " ";
      }
      svg += "<polyline clip-path=\"url(#" + clip_id + ")\" fill=\"none\" stroke=\"" +
             s.color + "\" stroke-width=\"1.4\"" +
             (s.dashed ? " stroke-dasharray=\"6 4\"" : "") + " points=\"" + pts + "\"/>\n";
    }

    // legend, top-right inside the panel
    double ly = py + 12;
    for (const PlotSeries& s : panel.series) {
      const double lx = px + pw - 150;
      svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 3) + "\" x2=\"" +
             num(lx + 22) + "\" y2=\"" + num(ly - 3) + "\" stroke=\"" + s.color +
             "\" stroke-width=\"1.6\"" + (s.dashed ? " stroke-dasharray=\"6 4\"" : "") +
             "/>\n";
      svg += "<text x=\"" + num(lx + 27) + "\" y=\"" + num(ly) + "\" font-size=\"10\">" +
             xml_escape(s.label) + "</text>\n";
      ly += 13;
    }
    ++panel_idx;
  }
  svg += "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot open for writing: " + path);
  out << svg;
  if (!out) throw SimError("failed writing: " + path);
}

}  // namespace uam
