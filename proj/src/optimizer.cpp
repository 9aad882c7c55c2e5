#include "hybridcool/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "hybridcool/analytic.hpp"
#include "hybridcool/spectrum.hpp"

namespace hybridcool {
namespace optimizer {

namespace {

using spectrum::EvalMode;
using spectrum::SpectrumModel;

SpectrumModel model_at(const ReducedParams& r, double gain) {
  ReducedParams rg = r;
  rg.G = gain;
  // Finite filter bandwidths are honored through the correlator-sum path;
  // the flagged infinite limit uses the flat-filter expression directly.
  const EvalMode mode =
      rg.fb_infinite() ? EvalMode::kClosedForm : EvalMode::kCorrelatorSum;
  return spectrum::make_model(rg, mode);
}

}  // namespace

GainOptimum optimize_gain(const ReducedParams& r, const OptimizerConfig& config) {
  r.validate();
  config.quad.validate();
  if (r.c_m == 0.0 || r.eta == 0.0) {
    throw std::invalid_argument("gain optimization requires a measurement channel");
  }
  if (!params::stability(r)) {
    throw std::invalid_argument("gain optimization requires stable parameters");
  }
  if (r.g() > 0.45 * r.Omega) {
    throw std::invalid_argument(
        "coupling within 10% of the instability threshold: optimum untrustworthy");
  }

  GainOptimum out;
  out.g_opt0 = analytic::optimal_gain_zero_order(r);

  int iters = 0;
  const auto deriv = [&](double gain, double* err) {
    ++iters;
    return quadrature::variance_derivative(model_at(r, gain), config.quad, err);
  };
  const auto finish = [&](double gain, OptStatus status, double lo, double hi) {
    out.g_opt = gain;
    out.status = status;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.iterations = iters;
    out.variance_zp = quadrature::variance_zp_total(model_at(r, gain), config.quad);
    out.gain_ratio = out.g_opt0 > 0.0 ? gain / out.g_opt0 : 0.0;
    return out;
  };

  double lo = 0.0;
  double err_est = 0.0;
  double flo = deriv(lo, &err_est);
  if (flo >= 0.0) {
    // Feedback does not help at all; zero gain minimizes.
    return finish(0.0, OptStatus::kBoundaryMinimum, 0.0, 0.0);
  }
  double hi = config.bracket_factor * out.g_opt0;
  if (!(hi > 0.0)) hi = 1.0;
  double fhi = deriv(hi, &err_est);
  for (int k = 0; fhi < 0.0 && k < config.max_bracket_expansions; ++k) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    fhi = deriv(hi, &err_est);
  }
  if (fhi < 0.0) {
    // Still descending after all expansions: report the boundary.
    return finish(hi, OptStatus::kBoundaryMinimum, lo, hi);
  }

  // Illinois false-position on the bracketed derivative root; the bracket
  // endpoints carry opposite derivative signs throughout, certifying a
  // sampled second-order (minimum) condition at convergence.
  double a = lo, b = hi, fa = flo, fb = fhi;
  double fa_w = fa, fb_w = fb;
  int side = 0;
  while (b - a > config.gain_tol * std::max(b, out.g_opt0) &&
         iters < config.max_iterations) {
    double s = (a * fb_w - b * fa_w) / (fb_w - fa_w);
    if (!(s > a && s < b)) s = 0.5 * (a + b);
    double e = 0.0;
    const double fs = deriv(s, &e);
    if (fs == 0.0 || std::abs(fs) <= 2.0 * e) {
      // Below the quadrature noise floor: the root is not resolvable further.
      a = b = s;
      fa = fb = fs;
      break;
    }
    if (fs < 0.0) {
      a = s;
      fa = fa_w = fs;
      if (side == -1) fb_w *= 0.5;
      side = -1;
    } else {
      b = s;
      fb = fb_w = fs;
      if (side == +1) fa_w *= 0.5;
      side = +1;
    }
  }
  return finish(0.5 * (a + b), OptStatus::kConverged, a, b);
}

}  // namespace optimizer
}  // namespace hybridcool
