#pragma once

#include <string>
#include <vector>

namespace sapkit {

// Minimal static line-plot writer. One polyline per series, shared axes,
// auto-scaled to the data range.
struct PlotSeries {
  std::string label;
  std::string color = "#1f6fb2";
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;  // plot log10 of (positive) y values
  std::vector<PlotSeries> series;
};

std::string render_svg(const PlotSpec& plot, int width = 720, int height = 440);

}  // namespace sapkit
