#ifndef HYBRIDCOOL_PARAMS_HPP_
#define HYBRIDCOOL_PARAMS_HPP_

#include <cmath>
#include <limits>

#include "hybridcool/constants.hpp"

namespace hybridcool {
namespace params {

// Full apparatus description. All rates are angular (rad/s).
struct PhysicalParams {
  double M = 0.0;            // mechanical effective mass, kg
  double omega_m = 0.0;      // mechanical resonance, rad/s
  double gamma_m = 0.0;      // mechanical damping, rad/s
  double T_bath = 0.0;       // mechanical bath temperature, K
  double m_atom = 0.0;       // single-atom mass, kg
  double N = 0.0;            // atom count (integer-valued; 0 = no ensemble)
  double omega_a = 0.0;      // atomic trap frequency, rad/s
  double gamma_a = 0.0;      // atomic damping, rad/s
  double kappa_MC = 0.0;     // mechanics-cavity linewidth, rad/s
  double kappa_AC = 0.0;     // atom-cavity linewidth, rad/s
  double alpha_d = 0.0;      // drive amplitude, sqrt(photons/s); 0 = no drive
  double g_m = 0.0;          // cavity frequency pull per displacement, rad/(s*m); nonzero
  double k_wave = 0.0;       // optical wavenumber, 1/m
  double delta_t = 0.0;      // trap-beam detuning from atomic line, rad/s; < 0 (red)
  double mu = 0.0;           // transition dipole moment, C*m
  double mode_volume = 0.0;  // cavity mode volume, m^3
  double gamma_e = 0.0;      // excited-state decay parameter, rad/s
  double eta = 1.0;          // detection efficiency in [0,1]

  // Throws std::invalid_argument on any out-of-range field.
  void validate() const;

  // Zero-point widths sqrt(hbar/(2 M omega)), m.
  double x_zp_m() const { return std::sqrt(kHbar / (2.0 * M * omega_m)); }
  double x_zp_a() const { return std::sqrt(kHbar / (2.0 * N * m_atom * omega_a)); }
};

// Occupancy model for the mechanical bath.
enum class BathModel {
  kBose,      // 1/(exp(hbar w / kB T) - 1)
  kHighTemp,  // kB T / (hbar w)
};

// Minimal closed parameter set for the spectrum. Dimensionless except
// the rates; every downstream module consumes this form.
struct ReducedParams {
  double Omega = 0.0;    // common resonance (trap = mechanics), rad/s
  double gamma_m = 0.0;  // mechanical damping, rad/s
  double gamma_a = 0.0;  // atomic damping, rad/s
  double n_bath = 0.0;   // mechanical bath occupancy
  double c_m = 0.0;      // optomechanical cooperativity
  double c_a = 0.0;      // atomic cooperativity
  double eta = 1.0;      // detection efficiency in [0,1]
  double G = 0.0;        // feedback gain (linewidth-broadening factor)
  // Feedback filter bandwidth, rad/s; infinity selects the unfiltered
  // (flat-response) feedback model.
  double fb_bandwidth = std::numeric_limits<double>::infinity();

  // Joint atom-mechanics cooperativity and the coherent coupling rate it fixes.
  double c() const { return 16.0 * c_a * c_m; }
  double g() const { return 0.5 * std::sqrt(c() * gamma_a * gamma_m); }
  bool fb_infinite() const { return std::isinf(fb_bandwidth); }

  // Throws std::invalid_argument on any out-of-range field.
  void validate() const;
};

enum class Regime {
  kSympatheticGround,
  kFeedbackGround,
  kBothGround,
  kNeither,
  kUnstable,
};

// Primary label plus the individual inequalities that produced it.
struct RegimeLabel {
  Regime primary = Regime::kNeither;
  bool cond_nbath_lt_c = false;      // n_bath < c
  bool cond_ca_gt_1_24 = false;      // c_a > 1/24
  bool cond_rate_hierarchy = false;  // Gamma_m n_bath << Gamma_a (factor rule)
  bool cond_feedback = false;        // n_bath < (9 eta - 1) c_m
  bool cond_overlap_eta = false;     // 1 >= eta > (1/9)(1 + (2/3) Gamma_a Gamma_m n_bath / Omega^2)
  bool sympathetic() const { return cond_nbath_lt_c && cond_ca_gt_1_24 && cond_rate_hierarchy; }
  bool feedback() const { return cond_feedback; }
};

// Physical-consistency report; informational only.
struct DiagnosticsReport {
  double gordon_ashkin_rate = 0.0;      // recoil-type heating rate, rad/s
  bool gordon_ashkin_negligible = false;  // rate << gamma_a/2 (factor rule)
  double atomic_backaction_rate = 0.0;  // worst-case lossy-trap heating 2 gamma_a c_a, rad/s
  bool adiabatic_MC = false;            // kappa_MC >> Omega
  bool adiabatic_AC = false;            // kappa_AC >> Omega
  // Dipole-force coupling required by the stated trap frequency, over the
  // value implied by the dipole matrix element; 1 = self-consistent trap.
  double trap_consistency = 0.0;
};

// Derives the reduced set. Requires omega_a = omega_m (resonant operation).
ReducedParams reduce(const PhysicalParams& p, BathModel bath = BathModel::kBose);

// Coherent atom-mechanics coupling rate g (rad/s) via the ensemble-cascade
// formula; cross-checked internally against the static spring constant K.
double coupling_rate(const PhysicalParams& p);

// Static cross-spring constant K (N/m) linking the two oscillators.
double spring_constant(const PhysicalParams& p);

// True iff the coupled system is stable: g < Omega/2 (boundary unstable).
bool stability(const ReducedParams& r);

// Regime classification; throws std::invalid_argument on unstable input.
// much_factor operationalizes "much less than" as a fixed ratio.
RegimeLabel classify(const ReducedParams& r, double much_factor = 10.0);

DiagnosticsReport diagnostics(const PhysicalParams& p, double much_factor = 10.0);

}  // namespace params
}  // namespace hybridcool

#endif  // HYBRIDCOOL_PARAMS_HPP_
