#pragma once

#include <string>
#include <vector>

namespace uam {

/// Minimal self-contained SVG line-chart emitter for simulation results.
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct PlotPanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  // Optional y-range override; series are clipped to the panel box, which
  // keeps diverging curves readable.
  bool has_y_range = false;
  double y_min = 0.0;
  double y_max = 1.0;
};

/// Writes stacked panels sharing the document width. Throws SimError on I/O
/// failure.
void write_svg_panels(const std::string& path, const std::string& title,
                      const std::vector<PlotPanel>& panels, int width = 760,
                      int panel_height = 230);

/// Color cycle used across plots.
const std::string& plot_color(std::size_t index);

}  // namespace uam
