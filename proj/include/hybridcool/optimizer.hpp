#ifndef HYBRIDCOOL_OPTIMIZER_HPP_
#define HYBRIDCOOL_OPTIMIZER_HPP_

#include "hybridcool/params.hpp"
#include "hybridcool/quadrature.hpp"

namespace hybridcool {
namespace optimizer {

using params::ReducedParams;

struct OptimizerConfig {
  quadrature::QuadratureConfig quad{};
  double gain_tol = 1e-9;          // relative width of the final gain bracket
  double bracket_factor = 10.0;    // initial upper bracket = factor * g_opt0
  int max_bracket_expansions = 3;  // doublings when the derivative has no sign change
  int max_iterations = 200;
};

enum class OptStatus {
  kConverged,        // interior derivative root, bracket certifies the minimum
  kBoundaryMinimum,  // no sign change after expansions; boundary value returned
};

struct GainOptimum {
  double g_opt = 0.0;        // minimizing feedback gain
  double variance_zp = 0.0;  // variance at g_opt, zero-point units
  double g_opt0 = 0.0;       // zero-order closed-form gain
  double gain_ratio = 0.0;   // g_opt / g_opt0
  int iterations = 0;        // derivative evaluations consumed
  double bracket_lo = 0.0;   // final bracket; derivative is <= 0 at lo, >= 0 at hi
  double bracket_hi = 0.0;
  OptStatus status = OptStatus::kConverged;
};

// Minimizes the steady-state variance over the feedback gain by bracketed
// secant/bisection root-finding on the analytic-derivative integral.
// Throws std::invalid_argument when there is no measurement channel
// (c_m = 0 or eta = 0) or when g > 0.45 Omega (too close to instability for
// a trustworthy optimum; such cells are reported as truncated upstream).
GainOptimum optimize_gain(const ReducedParams& r, const OptimizerConfig& config = {});

}  // namespace optimizer
}  // namespace hybridcool

#endif  // HYBRIDCOOL_OPTIMIZER_HPP_
