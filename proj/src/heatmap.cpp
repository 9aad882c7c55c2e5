#include "hybridcool/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hybridcool {
namespace heatmap {

namespace {

struct Column {
  const char* name;
  bool log_scale;
  std::function<double(const sweep::SweepCell&)> get;
};

const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {"var_num_g0", true, [](const sweep::SweepCell& c) { return c.var_num_g0; }},
      {"var_num_gopt", true, [](const sweep::SweepCell& c) { return c.var_num_gopt; }},
      {"var_weak", true, [](const sweep::SweepCell& c) { return c.var_weak; }},
      {"var_strong", true, [](const sweep::SweepCell& c) { return c.var_strong; }},
      {"g_opt", true, [](const sweep::SweepCell& c) { return c.g_opt; }},
      {"g_opt0", true, [](const sweep::SweepCell& c) { return c.g_opt0; }},
      {"gain_ratio", false, [](const sweep::SweepCell& c) { return c.gain_ratio; }},
      {"improvement_db", false,
       [](const sweep::SweepCell& c) {
         if (!std::isfinite(c.var_num_g0) || !std::isfinite(c.var_num_gopt) ||
             c.var_num_g0 <= 0.0 || c.var_num_gopt <= 0.0) {
           return std::numeric_limits<double>::quiet_NaN();
         }
         return 10.0 * std::log10(c.var_num_g0 / c.var_num_gopt);
       }},
  };
  return cols;
}

// Perceptually uniform ramp, anchor colors interpolated linearly.
struct Rgb {
  double r, g, b;
};

Rgb viridis(double t) {
  static const Rgb anchors[] = {
      {0x44 / 255.0, 0x01 / 255.0, 0x54 / 255.0}, {0x48 / 255.0, 0x28 / 255.0, 0x78 / 255.0},
      {0x3e / 255.0, 0x49 / 255.0, 0x89 / 255.0}, {0x31 / 255.0, 0x68 / 255.0, 0x8e / 255.0},
      {0x26 / 255.0, 0x82 / 255.0, 0x8e / 255.0}, {0x1f / 255.0, 0x9e / 255.0, 0x89 / 255.0},
      {0x35 / 255.0, 0xb7 / 255.0, 0x79 / 255.0}, {0x6e / 255.0, 0xce / 255.0, 0x58 / 255.0},
      {0xfd / 255.0, 0xe7 / 255.0, 0x25 / 255.0}};
  constexpr int n = 8;  // segments
  t = std::clamp(t, 0.0, 1.0);
  const double s = t * n;
  const int i = std::min(static_cast<int>(s), n - 1);
  const double f = s - i;
  const Rgb& a = anchors[i];
  const Rgb& b = anchors[i + 1];
  return {a.r + f * (b.r - a.r), a.g + f * (b.g - a.g), a.b + f * (b.b - a.b)};
}

std::string hex_color(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(c.r * 255.0)),
                static_cast<int>(std::lround(c.g * 255.0)),
                static_cast<int>(std::lround(c.b * 255.0)));
  return buf;
}

std::string fmt(double v, const char* spec = "%.4g") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

std::vector<std::string> supported_columns() {
  std::vector<std::string> names;
  for (const Column& c : columns()) names.emplace_back(c.name);
  return names;
}

std::string render_svg(const sweep::SweepResult& result, const std::string& column) {
  const Column* col = nullptr;
  for (const Column& c : columns()) {
    if (column == c.name) {
      col = &c;
      break;
    }
  }
  if (col == nullptr) throw std::invalid_argument("unknown heatmap column '" + column + "'");
  const sweep::SweepGrid& g = result.grid;
  if (result.cells.size() != static_cast<std::size_t>(g.nx) * static_cast<std::size_t>(g.ny)) {
    throw std::invalid_argument("sweep result does not match its grid");
  }

  // Scaled value per cell; NaN marks unstable/failed/undefined cells.
  std::vector<double> value(result.cells.size(), std::numeric_limits<double>::quiet_NaN());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const sweep::SweepCell& cell = result.cells[i];
    if (!cell.stable || cell.status == "failed") continue;
    double v = col->get(cell);
    if (col->log_scale) v = v > 0.0 && std::isfinite(v) ? std::log10(v) : std::nan("");
    if (!std::isfinite(v)) continue;
    value[i] = v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo <= hi)) throw std::runtime_error("heatmap column '" + column + "' has no finite cells");
  const double span = hi > lo ? hi - lo : 1.0;

  constexpr double kCell = 9.0;
  constexpr double kLeft = 64.0, kTop = 40.0, kBottom = 58.0, kLegendW = 74.0;
  const double plot_w = kCell * g.nx;
  const double plot_h = kCell * g.ny;
  const double width = kLeft + plot_w + kLegendW;
  const double height = kTop + plot_h + kBottom;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">"
      << column << (col->log_scale ? " (log10 scale)" : "") << "</text>\n";

  // Cells: iy = 0 is the bottom row (y axis increases upward).
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const std::size_t idx = static_cast<std::size_t>(iy) * g.nx + ix;
      const sweep::SweepCell& cell = result.cells[idx];
      std::string fill;
      if (!cell.stable) {
        fill = "#bdbdbd";  // unstable wedge
      } else if (std::isnan(value[idx])) {
        fill = "#e8e4df";  // failed or undefined
      } else {
        fill = hex_color(viridis((value[idx] - lo) / span));
      }
      const double px = kLeft + kCell * ix;
      const double py = kTop + plot_h - kCell * (iy + 1);
      svg << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kCell << "\" height=\""
          << kCell << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // Axis ticks: horizontal in dB (10x the log10 coordinate), vertical in decades.
  const int n_ticks = 5;
  for (int t = 0; t < n_ticks; ++t) {
    const double fx = static_cast<double>(t) / (n_ticks - 1);
    const double xv = g.x_min + fx * (g.x_max - g.x_min);
    const double px = kLeft + fx * plot_w;
    svg << "<line x1=\"" << px << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << px << "\" y2=\""
        << kTop + plot_h + 4 << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << px << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(10.0 * xv, "%.3g") << "</text>\n";
    const double fy = static_cast<double>(t) / (n_ticks - 1);
    const double yv = g.y_min + fy * (g.y_max - g.y_min);
    const double py = kTop + plot_h - fy * plot_h;
    svg << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << py << "\" x2=\"" << kLeft << "\" y2=\""
        << py << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(yv, "%.3g") << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << height - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
         "8 c_m / n_bath  [dB]</text>\n";
  svg << "<text x=\"16\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 "
      << kTop + plot_h / 2 << ")\">log10(c_a)</text>\n";

  // Legend: vertical ramp with min/max labels (top = max).
  const double lx = kLeft + plot_w + 22.0;
  const int bands = 48;
  const double band_h = plot_h / bands;
  for (int b = 0; b < bands; ++b) {
    const double t = 1.0 - (static_cast<double>(b) + 0.5) / bands;
    svg << "<rect x=\"" << lx << "\" y=\"" << kTop + b * band_h << "\" width=\"14\" height=\""
        << band_h + 0.5 << "\" fill=\"" << hex_color(viridis(t)) << "\"/>\n";
  }
  svg << "<rect x=\"" << lx << "\" y=\"" << kTop << "\" width=\"14\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#333\"/>\n";
  const double legend_lo = col->log_scale ? std::pow(10.0, lo) : lo;
  const double legend_hi = col->log_scale ? std::pow(10.0, hi) : hi;
  svg << "<text x=\"" << lx + 18 << "\" y=\"" << kTop + 10
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(legend_hi) << "</text>\n";
  svg << "<text x=\"" << lx + 18 << "\" y=\"" << kTop + plot_h
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(legend_lo) << "</text>\n";
  svg << "<rect x=\"" << lx << "\" y=\"" << kTop + plot_h + 10
      << "\" width=\"14\" height=\"10\" fill=\"#bdbdbd\"/>\n";
  svg << "<text x=\"" << lx + 18 << "\" y=\"" << kTop + plot_h + 19
      << "\" font-family=\"sans-serif\" font-size=\"11\">unstable</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace heatmap
}  // namespace hybridcool
