#ifndef HYBRIDCOOL_SWEEP_HPP_
#define HYBRIDCOOL_SWEEP_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hybridcool/optimizer.hpp"
#include "hybridcool/params.hpp"

namespace hybridcool {
namespace sweep {

using params::ReducedParams;

// Map axes in cooperativity space: x = log10(8 c_m / n_bath),
// y = log10(c_a). Everything else is held fixed across the grid.
struct SweepGrid {
  int nx = 64;
  int ny = 64;
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -3.0;
  double y_max = 6.0;
  double Omega = 0.0;    // rad/s
  double gamma_m = 0.0;  // rad/s
  double gamma_a = 0.0;  // rad/s
  double n_bath = 0.0;
  double eta = 1.0;
  double fb_bandwidth = std::numeric_limits<double>::infinity();  // rad/s
  bool optimize = true;   // also run the gain optimizer per cell
  double rel_tol = 1e-8;  // quadrature relative tolerance per cell

  // Throws std::invalid_argument on bad axes or fixed parameters.
  void validate() const;

  // Cell coordinates (index 0..n-1, inclusive endpoints).
  double x_at(int ix) const;
  double y_at(int iy) const;

  // Reduced parameters at a cell, G = 0.
  ReducedParams cell_params(int ix, int iy) const;
};

// One evaluated grid cell. Doubles that do not apply (e.g. optimization
// columns when the cell is unstable) hold quiet NaN.
struct SweepCell {
  int ix = 0;
  int iy = 0;
  double cm = 0.0;
  double ca = 0.0;
  double c = 0.0;
  double g_over_omega = 0.0;
  bool stable = false;
  double var_num_g0 = std::numeric_limits<double>::quiet_NaN();
  double var_num_gopt = std::numeric_limits<double>::quiet_NaN();
  double var_weak = std::numeric_limits<double>::quiet_NaN();
  double var_strong = std::numeric_limits<double>::quiet_NaN();
  double g_opt = std::numeric_limits<double>::quiet_NaN();
  double g_opt0 = std::numeric_limits<double>::quiet_NaN();
  double gain_ratio = std::numeric_limits<double>::quiet_NaN();
  params::Regime regime = params::Regime::kUnstable;
  std::string status;  // ok | unstable | truncated | failed
  double err_est = std::numeric_limits<double>::quiet_NaN();
};

struct SweepResult {
  SweepGrid grid;
  std::vector<SweepCell> cells;  // row-major by (iy, ix), size nx*ny
};

inline const char* regime_name(params::Regime r) {
  switch (r) {
    case params::Regime::kSympatheticGround: return "sympathetic";
    case params::Regime::kFeedbackGround: return "feedback";
    case params::Regime::kBothGround: return "both";
    case params::Regime::kNeither: return "neither";
    case params::Regime::kUnstable: return "unstable";
  }
  return "unknown";
}

// Evaluates one cell; never throws (failures land in status = "failed").
SweepCell evaluate_cell(const SweepGrid& grid, int ix, int iy);

// Evaluates the whole grid. threads = 0 picks the hardware concurrency;
// the output is identical for every thread count (cells are written by
// index, not by completion order).
SweepResult run_sweep(const SweepGrid& grid, int threads = 0);

}  // namespace sweep
}  // namespace hybridcool

#endif  // HYBRIDCOOL_SWEEP_HPP_
