#include "sapkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sapkit {

namespace {

struct Range {
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();

  void take(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (lo > hi) { lo = 0.0; hi = 1.0; }
    if (hi - lo < 1e-12) { lo -= 0.5; hi += 0.5; }
    const double m = 0.04 * (hi - lo);
    lo -= m;
    hi += m;
  }
  double map(double v, double a, double b) const { return a + (v - lo) / (hi - lo) * (b - a); }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& plot, int width, int height) {
  const double ml = 64, mr = 16, mt = 36, mb = 44;  // margins
  const double x0 = ml, x1 = width - mr, y0 = height - mb, y1 = mt;

  Range rx, ry;
  for (const auto& s : plot.series)
    for (auto [x, y] : s.points) {
      rx.take(x);
      if (plot.log_y) {
        if (y > 0.0) ry.take(std::log10(y));
      } else {
        ry.take(y);
      }
    }
  rx.pad();
  ry.pad();

  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">"
      << escape(plot.title) << "</text>\n";

  // frame + ticks
  out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << (x1 - x0)
      << "\" height=\"" << (y0 - y1) << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = rx.lo + (rx.hi - rx.lo) * i / 4.0;
    const double fy = ry.lo + (ry.hi - ry.lo) * i / 4.0;
    const double px = rx.map(fx, x0, x1);
    const double py = ry.map(fy, y0, y1);
    out << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\""
        << y0 + 4 << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << y0 + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fx
        << "</text>\n"
        << "<line x1=\"" << x0 - 4 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\""
        << py << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << x0 - 8 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << (plot.log_y ? "1e" + std::to_string(static_cast<int>(std::round(fy)))
                       : (std::ostringstream() << fy).str())
        << "</text>\n";
  }
  out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << escape(plot.x_label) << "</text>\n"
      << "<text x=\"14\" y=\"" << (y0 + y1) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 14 "
      << (y0 + y1) / 2 << ")\">" << escape(plot.y_label) << "</text>\n";

  double legend_y = y1 + 14;
  for (const auto& s : plot.series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : s.points) {
      double yy = plot.log_y ? (y > 0.0 ? std::log10(y) : ry.lo) : y;
      out << rx.map(x, x0, x1) << "," << ry.map(yy, y0, y1) << " ";
    }
    out << "\"/>\n";
    if (!s.label.empty()) {
      out << "<line x1=\"" << x1 - 120 << "\" y1=\"" << legend_y << "\" x2=\"" << x1 - 96
          << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"/>\n"
          << "<text x=\"" << x1 - 90 << "\" y=\"" << legend_y + 4
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
      legend_y += 16;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sapkit
