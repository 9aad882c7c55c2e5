#include "hybridcool/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hybridcool {
namespace analytic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shared intermediates, filled regardless of which closed form is requested.
void fill_common(const ReducedParams& r, AnalyticPrediction* out) {
  const double c = r.c();
  out->snr = 16.0 * r.eta * r.c_m * (r.n_bath + r.c_m + 0.5);
  out->g_opt0 = std::sqrt(1.0 + out->snr) - 1.0;
  out->n_a_eff = (0.5 * c) / (1.0 + (r.gamma_m / r.gamma_a) * (1.0 + c));
  out->gamma_par = 1.0 / (1.0 / r.gamma_a + 1.0 / (r.gamma_m * (1.0 + c)));
  out->gamma_ser = r.gamma_a + r.gamma_m * (1.0 + c);
  out->gamma_n = 0.5 * (r.gamma_a + r.gamma_m);
  const double g = r.g();
  out->flag_weak = r.gamma_a >= 10.0 * g;
  out->flag_strong = g >= 10.0 * std::max(r.gamma_a, r.gamma_m);
  out->flag_hierarchy = r.gamma_a >= 10.0 * r.gamma_m;
  out->flag_stable = params::stability(r);
}

// Satisfaction ratio for "lhs < rhs": > 1 iff satisfied, with lhs = 0 mapped
// to the sign of rhs.
double margin_ratio(double lhs, double rhs) {
  if (lhs > 0.0) return rhs / lhs;
  return rhs > 0.0 ? kInf : 0.0;
}

}  // namespace

double optimal_gain_zero_order(const ReducedParams& r) {
  r.validate();
  const double snr = 16.0 * r.eta * r.c_m * (r.n_bath + r.c_m + 0.5);
  return std::sqrt(1.0 + snr) - 1.0;
}

AnalyticPrediction feedback_only_optimum(const ReducedParams& r) {
  r.validate();
  if (r.c_m == 0.0 || r.eta == 0.0) {
    throw std::invalid_argument("feedback optimum requires a measurement channel");
  }
  AnalyticPrediction out;
  out.regime = PredictionRegime::kFeedbackOnly;
  fill_common(r, &out);
  out.variance_zp = out.g_opt0 / (4.0 * r.eta * r.c_m);
  out.applicable = out.flag_stable && r.c_a == 0.0;
  return out;
}

AnalyticPrediction weak_coupling_variance(const ReducedParams& r) {
  r.validate();
  AnalyticPrediction out;
  out.regime = PredictionRegime::kWeakCoupling;
  fill_common(r, &out);
  out.variance_zp = 2.0 * (r.n_bath + r.c_m + 0.5 + out.n_a_eff) / (1.0 + r.c());
  out.applicable = out.flag_stable && out.flag_weak;
  return out;
}

AnalyticPrediction strong_coupling_variance(const ReducedParams& r) {
  r.validate();
  const double g = r.g();
  if (g >= 0.5 * r.Omega) {
    throw std::invalid_argument("strong-coupling variance diverges at g >= Omega/2");
  }
  AnalyticPrediction out;
  out.regime = PredictionRegime::kStrongCoupling;
  fill_common(r, &out);
  const double split = 1.0 - 4.0 * g * g / (r.Omega * r.Omega);
  out.variance_zp = ((r.gamma_m / out.gamma_n) * (r.n_bath + r.c_m) + 1.0) / split;
  out.applicable = out.flag_stable && out.flag_strong;
  return out;
}

double sympathetic_variance_exact(const ReducedParams& r) {
  r.validate();
  if (r.G != 0.0) {
    throw std::invalid_argument("exact sympathetic variance is a zero-feedback form");
  }
  const double g = r.g();
  if (g >= 0.5 * r.Omega) {
    throw std::invalid_argument("no stationary state at g >= Omega/2");
  }
  const double c = r.c();
  const double gamma_n = 0.5 * (r.gamma_a + r.gamma_m);
  const double split = 1.0 - 4.0 * g * g / (r.Omega * r.Omega);
  const double hot = r.n_bath + r.c_m;
  return ((r.gamma_m / gamma_n) * hot + 1.0) / split +
         2.0 * hot / ((1.0 + r.gamma_m / r.gamma_a) * (1.0 + c));
}

GroundStateCriteria ground_state_criteria(const ReducedParams& r, double much_factor) {
  r.validate();
  if (!(much_factor > 1.0)) throw std::invalid_argument("much_factor must exceed 1");
  GroundStateCriteria out;
  const double c = r.c();

  const double fb_rhs = (9.0 * r.eta - 1.0) * r.c_m;
  out.feedback_margin = margin_ratio(r.n_bath, fb_rhs);
  out.feedback = out.feedback_margin > 1.0;

  out.symp_occupancy_margin = margin_ratio(r.n_bath, c);
  out.symp_occupancy = out.symp_occupancy_margin > 1.0;

  out.symp_cooperativity_margin = 24.0 * r.c_a;
  out.symp_cooperativity = out.symp_cooperativity_margin > 1.0;

  out.symp_rate_margin = r.gamma_a / std::max(much_factor * r.gamma_m * r.n_bath, 1e-300);
  out.symp_rate = much_factor * r.gamma_m * r.n_bath < r.gamma_a;

  out.sympathetic = out.symp_occupancy && out.symp_cooperativity && out.symp_rate;

  const double n_a_eff = (0.5 * c) / (1.0 + (r.gamma_m / r.gamma_a) * (1.0 + c));
  const double suff_rhs = (2.0 + 3.0 * r.gamma_m / r.gamma_a) * n_a_eff - r.c_m;
  out.sufficient_margin = margin_ratio(r.n_bath, suff_rhs);
  out.sufficient_sympathetic = out.sufficient_margin > 1.0;

  const double eta_floor =
      (1.0 + (2.0 / 3.0) * r.gamma_a * r.gamma_m * r.n_bath / (r.Omega * r.Omega)) / 9.0;
  out.overlap_eta_margin = r.eta / eta_floor;
  out.overlap_eta = r.eta <= 1.0 && r.eta > eta_floor;

  return out;
}

}  // namespace analytic
}  // namespace hybridcool
