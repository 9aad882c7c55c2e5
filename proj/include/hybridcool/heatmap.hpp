#ifndef HYBRIDCOOL_HEATMAP_HPP_
#define HYBRIDCOOL_HEATMAP_HPP_

#include <string>
#include <vector>

#include "hybridcool/sweep.hpp"

namespace hybridcool {
namespace heatmap {

// Column names render_svg accepts. The numeric sweep columns are shown on a
// log10 color scale; "improvement_db" (10 log10(var_g0/var_gopt)) and
// "gain_ratio" are shown linearly.
std::vector<std::string> supported_columns();

// Renders one column of a sweep as a self-contained SVG: viridis color
// ramp, axis labels in the map's normalized units (horizontal 8 c_m/n_bath
// in dB, vertical log10(c_a)), a min/max legend, and a distinct flat fill
// for unstable or failed cells. Throws std::invalid_argument for unknown
// columns and std::runtime_error when no cell has a finite value.
std::string render_svg(const sweep::SweepResult& result, const std::string& column);

}  // namespace heatmap
}  // namespace hybridcool

#endif  // HYBRIDCOOL_HEATMAP_HPP_
