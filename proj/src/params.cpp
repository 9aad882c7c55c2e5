#include "hybridcool/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hybridcool/constants.hpp"

namespace hybridcool {
namespace params {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void PhysicalParams::validate() const {
  require(finite_pos(M), "M must be positive");
  require(finite_pos(omega_m), "omega_m must be positive");
  require(finite_pos(gamma_m), "gamma_m must be positive");
  require(finite_pos(T_bath), "T_bath must be positive");
  require(finite_pos(m_atom), "m_atom must be positive");
  require(std::isfinite(N) && N >= 0.0 && N == std::floor(N),
          "N must be a nonnegative integer");
  require(finite_pos(omega_a), "omega_a must be positive");
  require(finite_pos(gamma_a), "gamma_a must be positive");
  require(finite_pos(kappa_MC), "kappa_MC must be positive");
  require(finite_pos(kappa_AC), "kappa_AC must be positive");
  require(std::isfinite(alpha_d) && alpha_d >= 0.0, "alpha_d must be nonnegative");
  require(std::isfinite(g_m) && g_m != 0.0, "g_m must be nonzero");
  require(finite_pos(k_wave), "k_wave must be positive");
  require(std::isfinite(delta_t) && delta_t < 0.0, "delta_t must be negative (red-detuned)");
  require(finite_pos(mu), "mu must be positive");
  require(finite_pos(mode_volume), "mode_volume must be positive");
  require(finite_pos(gamma_e), "gamma_e must be positive");
  require(std::isfinite(eta) && eta >= 0.0 && eta <= 1.0, "eta must lie in [0,1]");
}

void ReducedParams::validate() const {
  require(finite_pos(Omega), "Omega must be positive");
  require(finite_pos(gamma_m), "gamma_m must be positive");
  require(finite_pos(gamma_a), "gamma_a must be positive");
  require(std::isfinite(n_bath) && n_bath >= 0.0, "n_bath must be nonnegative");
  require(std::isfinite(c_m) && c_m >= 0.0, "c_m must be nonnegative");
  require(std::isfinite(c_a) && c_a >= 0.0, "c_a must be nonnegative");
  require(std::isfinite(eta) && eta >= 0.0 && eta <= 1.0, "eta must lie in [0,1]");
  require(std::isfinite(G) && G >= 0.0, "G must be nonnegative");
  require(fb_bandwidth > 0.0, "fb_bandwidth must be positive (or infinite)");
  require(std::isfinite(c()) && std::isfinite(g()), "derived c and g must be finite");
}

ReducedParams reduce(const PhysicalParams& p, BathModel bath) {
  p.validate();
  // Resonant operation: the trap is tuned onto the mechanical resonance.
  if (std::abs(p.omega_a - p.omega_m) > 1e-12 * p.omega_m) {
    throw std::invalid_argument("reduce requires omega_a = omega_m");
  }
  ReducedParams r;
  r.Omega = p.omega_m;
  r.gamma_m = p.gamma_m;
  r.gamma_a = p.gamma_a;
  const double x = kHbar * p.omega_m / (kBoltzmann * p.T_bath);
  r.n_bath = (bath == BathModel::kBose) ? 1.0 / std::expm1(x) : 1.0 / x;
  if (p.alpha_d == 0.0) {
    // No drive: no intracavity field, hence no measurement back-action and
    // no optical spring to the ensemble.
    r.c_m = 0.0;
    r.c_a = 0.0;
  } else {
    // Measurement cooperativity: back-action force spectral density over the
    // thermal-force unit, with the overcoupled intracavity amplitude
    // beta = 2 alpha_d / kappa_MC^(1/2).
    const double drive = 2.0 * p.g_m * p.alpha_d / p.kappa_MC;
    r.c_m = 2.0 * kHbar / (p.M * p.omega_m * p.gamma_m) * drive * drive;
    // Ensemble cooperativity written purely in trap quantities.
    const double s = 1.0 / (4.0 * p.k_wave * p.alpha_d);
    r.c_a = p.N * p.m_atom * std::pow(p.omega_a, 3) / (2.0 * kHbar * p.gamma_a) * s * s;
  }
  r.eta = p.eta;
  r.validate();
  return r;
}

double spring_constant(const PhysicalParams& p) {
  p.validate();
  // Cross-spring constant of the light-mediated static coupling, with the
  // dipole-force coefficient eliminated through the trap-frequency relation
  // omega_a^2 = -32 hbar g_a k^2 alpha_d^2 / (m kappa_AC).
  return 2.0 * p.N * p.m_atom * p.omega_a * p.omega_a * p.g_m / (p.k_wave * p.kappa_MC);
}

double coupling_rate(const PhysicalParams& p) {
  p.validate();
  const double g = std::sqrt(p.N) * (p.g_m / p.k_wave) * (p.omega_a / p.kappa_MC) *
                   std::sqrt(p.m_atom * p.omega_a / (p.M * p.omega_m));
  if (p.N > 0.0) {
    // Internal consistency: the coupling rate is the static spring constant
    // expressed in zero-point units, g = (K/hbar) x_zp_a x_zp_m.
    const double g_from_k = spring_constant(p) / kHbar * p.x_zp_a() * p.x_zp_m();
    if (std::abs(g_from_k - g) > 1e-12 * std::abs(g)) {
      throw std::runtime_error("coupling_rate self-check failed");
    }
  }
  return g;
}

bool stability(const ReducedParams& r) {
  r.validate();
  return r.g() < 0.5 * r.Omega;
}

RegimeLabel classify(const ReducedParams& r, double much_factor) {
  if (!stability(r)) {
    throw std::invalid_argument("classify requires stable parameters (g < Omega/2)");
  }
  require(much_factor > 1.0, "much_factor must exceed 1");
  RegimeLabel label;
  label.cond_nbath_lt_c = r.n_bath < r.c();
  label.cond_ca_gt_1_24 = r.c_a > 1.0 / 24.0;
  label.cond_rate_hierarchy = much_factor * r.gamma_m * r.n_bath < r.gamma_a;
  label.cond_feedback = r.n_bath < (9.0 * r.eta - 1.0) * r.c_m;
  label.cond_overlap_eta =
      r.eta <= 1.0 &&
      r.eta > (1.0 + (2.0 / 3.0) * r.gamma_a * r.gamma_m * r.n_bath / (r.Omega * r.Omega)) / 9.0;
  const bool s = label.sympathetic();
  const bool f = label.feedback();
  label.primary = s && f   ? Regime::kBothGround
                  : s      ? Regime::kSympatheticGround
                  : f      ? Regime::kFeedbackGround
                           : Regime::kNeither;
  return label;
}

DiagnosticsReport diagnostics(const PhysicalParams& p, double much_factor) {
  p.validate();
  require(much_factor > 1.0, "much_factor must exceed 1");
  DiagnosticsReport d;
  // Fluctuating dipole-force (recoil-type) heating of the trapped ensemble.
  d.gordon_ashkin_rate = p.omega_a * p.gamma_e / (8.0 * std::abs(p.delta_t));
  d.gordon_ashkin_negligible = much_factor * d.gordon_ashkin_rate < 0.5 * p.gamma_a;
  const ReducedParams r = reduce(p);
  d.atomic_backaction_rate = 2.0 * p.gamma_a * r.c_a;
  // Both cavities must respond fast compared to the mechanical timescale.
  d.adiabatic_MC = p.kappa_MC > much_factor * p.omega_m;
  d.adiabatic_AC = p.kappa_AC > much_factor * p.omega_a;
  // Dipole coupling needed to support the stated trap frequency vs the value
  // the dipole matrix element provides; both are negative for red detuning.
  if (p.alpha_d > 0.0) {
    const double ga_trap = -p.m_atom * p.kappa_AC * p.omega_a * p.omega_a /
                           (32.0 * kHbar * p.k_wave * p.k_wave * p.alpha_d * p.alpha_d);
    const double omega_d = kSpeedOfLight * p.k_wave;
    const double ga_dipole = p.mu * p.mu * omega_d /
                             (2.0 * kHbar * p.delta_t * kVacuumPermittivity * p.mode_volume);
    d.trap_consistency = ga_trap / ga_dipole;
  }
  return d;
}

}  // namespace params
}  // namespace hybridcool
