#ifndef HYBRIDCOOL_ANALYTIC_HPP_
#define HYBRIDCOOL_ANALYTIC_HPP_

#include "hybridcool/params.hpp"

namespace hybridcool {
namespace analytic {

using params::ReducedParams;

enum class PredictionRegime {
  kFeedbackOnly,    // no ensemble; optimized derivative feedback
  kWeakCoupling,    // ensemble adiabatically eliminated (fast atomic damping)
  kStrongCoupling,  // hybridized normal modes (coupling beats both dampings)
};

// A closed-form variance estimate plus the intermediates that produced it and
// honest applicability flags; nothing here is fitted to the numerics.
struct AnalyticPrediction {
  PredictionRegime regime = PredictionRegime::kFeedbackOnly;
  double variance_zp = 0.0;  // predicted <x^2>/x_zp^2

  double snr = 0.0;        // 16 eta c_m (n_bath + c_m + 1/2)
  double g_opt0 = 0.0;     // sqrt(1 + snr) - 1
  double n_a_eff = 0.0;    // effective ensemble occupancy seen by the mechanics
  double gamma_par = 0.0;  // parallel combination of the two cooling channels, rad/s
  double gamma_ser = 0.0;  // series combination, rad/s
  double gamma_n = 0.0;    // normal-mode linewidth (gamma_a + gamma_m)/2, rad/s

  // Applicability of the closed form at these parameters.
  bool applicable = false;
  bool flag_weak = false;      // gamma_a >= 10 g
  bool flag_strong = false;    // g >= 10 max(gamma_a, gamma_m)
  bool flag_hierarchy = false; // gamma_a >= 10 gamma_m
  bool flag_stable = false;    // g < Omega/2
};

// Zero-order optimal gain sqrt(1 + 16 eta c_m (n_bath + c_m + 1/2)) - 1.
double optimal_gain_zero_order(const ReducedParams& r);

// Optimized pure-feedback variance G_opt0/(4 eta c_m); the ensemble is
// ignored. Throws std::invalid_argument when c_m = 0 or eta = 0.
AnalyticPrediction feedback_only_optimum(const ReducedParams& r);

// Sympathetic-cooling variance with the ensemble adiabatically eliminated
// (no feedback): 2(n_bath + c_m + 1/2 + n_a_eff)/(1 + c). Never throws;
// check the flags.
AnalyticPrediction weak_coupling_variance(const ReducedParams& r);

// Hybridized-mode variance [(gamma_m/gamma_n)(n_bath + c_m) + 1]/(1 - 4g^2/Omega^2)
// (no feedback). Throws std::invalid_argument at g >= Omega/2.
AnalyticPrediction strong_coupling_variance(const ReducedParams& r);

// Exact stationary variance of the coupled pair at G = 0 and matched
// resonance, valid at every coupling and damping:
//   [(gamma_m/gamma_n)(n_bath + c_m) + 1]/(1 - 4g^2/Omega^2)
//     + 2(n_bath + c_m)/((1 + gamma_m/gamma_a)(1 + c)).
// Closed-form solution of the covariance equations; test reference.
// Throws std::invalid_argument if r.G != 0.
double sympathetic_variance_exact(const ReducedParams& r);

// Ground-state criteria with margins: each margin is the ratio by which the
// inequality is satisfied (> 1 = satisfied; boundary exactly 1 = false).
struct GroundStateCriteria {
  bool feedback = false;            // n_bath < (9 eta - 1) c_m
  double feedback_margin = 0.0;
  bool symp_occupancy = false;      // n_bath < c
  double symp_occupancy_margin = 0.0;
  bool symp_cooperativity = false;  // c_a > 1/24
  double symp_cooperativity_margin = 0.0;
  bool symp_rate = false;           // much_factor gamma_m n_bath < gamma_a
  double symp_rate_margin = 0.0;
  bool sympathetic = false;         // all three above
  bool sufficient_sympathetic = false;  // n_bath < (2 + 3 gamma_m/gamma_a) n_a_eff - c_m
  double sufficient_margin = 0.0;
  bool overlap_eta = false;  // 1 >= eta > (1/9)(1 + (2/3) gamma_a gamma_m n_bath/Omega^2)
  double overlap_eta_margin = 0.0;
};

GroundStateCriteria ground_state_criteria(const ReducedParams& r, double much_factor = 10.0);

}  // namespace analytic
}  // namespace hybridcool

#endif  // HYBRIDCOOL_ANALYTIC_HPP_
