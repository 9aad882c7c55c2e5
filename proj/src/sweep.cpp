#include "hybridcool/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hybridcool/analytic.hpp"
#include "hybridcool/quadrature.hpp"
#include "hybridcool/spectrum.hpp"

namespace hybridcool {
namespace sweep {

void SweepGrid::validate() const {
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  if (!(x_min < x_max) || !(y_min < y_max)) {
    throw std::invalid_argument("grid axis range must be increasing and finite");
  }
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
      !std::isfinite(y_max)) {
    throw std::invalid_argument("grid axis range must be increasing and finite");
  }
  ReducedParams probe = cell_params(0, 0);
  probe.validate();
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw std::invalid_argument("rel_tol out of range (0, 1e-2]");
  }
}

double SweepGrid::x_at(int ix) const {
  return x_min + (x_max - x_min) * static_cast<double>(ix) / (nx - 1);
}

double SweepGrid::y_at(int iy) const {
  return y_min + (y_max - y_min) * static_cast<double>(iy) / (ny - 1);
}

ReducedParams SweepGrid::cell_params(int ix, int iy) const {
  ReducedParams r;
  r.Omega = Omega;
  r.gamma_m = gamma_m;
  r.gamma_a = gamma_a;
  r.n_bath = n_bath;
  r.c_m = n_bath * std::pow(10.0, x_at(ix)) / 8.0;  // x = log10(8 c_m / n_bath)
  r.c_a = std::pow(10.0, y_at(iy));
  r.eta = eta;
  r.G = 0.0;
  r.fb_bandwidth = fb_bandwidth;
  return r;
}

SweepCell evaluate_cell(const SweepGrid& grid, int ix, int iy) {
  SweepCell cell;
  cell.ix = ix;
  cell.iy = iy;
  const ReducedParams r = grid.cell_params(ix, iy);
  cell.cm = r.c_m;
  cell.ca = r.c_a;
  cell.c = r.c();
  cell.g_over_omega = r.g() / r.Omega;
  cell.stable = params::stability(r);
  if (!cell.stable) {
    cell.regime = params::Regime::kUnstable;
    cell.status = "unstable";
    return cell;
  }
  cell.regime = params::classify(r).primary;
  cell.status = "ok";

  quadrature::QuadratureConfig quad;
  quad.rel_tol = grid.rel_tol;
  const spectrum::EvalMode mode = r.fb_infinite() ? spectrum::EvalMode::kClosedForm
                                                  : spectrum::EvalMode::kCorrelatorSum;
  try {
    double err = 0.0;
    cell.var_num_g0 = quadrature::variance_zp_total(spectrum::make_model(r, mode), quad, &err);
    cell.err_est = err;
    cell.var_weak = analytic::weak_coupling_variance(r).variance_zp;
    cell.var_strong = analytic::strong_coupling_variance(r).variance_zp;
    cell.g_opt0 = analytic::optimal_gain_zero_order(r);
  } catch (const std::exception&) {
    cell.status = "failed";
    return cell;
  }

  if (!grid.optimize) return cell;
  if (r.g() > 0.45 * r.Omega) {
    // The optimizer refuses cells this close to the instability boundary;
    // keep the G = 0 columns and mark the cell.
    cell.status = "truncated";
    return cell;
  }
  try {
    optimizer::OptimizerConfig config;
    config.quad = quad;
    const optimizer::GainOptimum opt = optimizer::optimize_gain(r, config);
    cell.g_opt = opt.g_opt;
    cell.g_opt0 = opt.g_opt0;
    cell.gain_ratio = opt.gain_ratio;
    cell.var_num_gopt = opt.variance_zp;
    if (opt.status == optimizer::OptStatus::kBoundaryMinimum) cell.status = "truncated";
  } catch (const std::exception&) {
    cell.status = "failed";
  }
  return cell;
}

SweepResult run_sweep(const SweepGrid& grid, int threads) {
  grid.validate();
  SweepResult result;
  result.grid = grid;
  const int total = grid.nx * grid.ny;
  result.cells.resize(static_cast<std::size_t>(total));

  int n_threads = threads;
  if (n_threads <= 0) n_threads = static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp(n_threads, 1, std::max(1, total));

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= total) return;
      const int iy = idx / grid.nx;  // row-major by (y, x)
      const int ix = idx % grid.nx;
      result.cells[static_cast<std::size_t>(idx)] = evaluate_cell(grid, ix, iy);
    }
  };
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

}  // namespace sweep
}  // namespace hybridcool
