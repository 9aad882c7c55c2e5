#ifndef HYBRIDCOOL_SPECTRUM_HPP_
#define HYBRIDCOOL_SPECTRUM_HPP_

#include <array>
#include <complex>

#include "hybridcool/params.hpp"

namespace hybridcool {
namespace spectrum {

using Complex = std::complex<double>;
using params::PhysicalParams;
using params::ReducedParams;

// Stationary force noises driving the mechanical position spectrum. The
// ensemble sees no measurement back-action; its only intrinsic drive is the
// cold optical bath, which reaches the mechanics through the static spring.
enum class NoiseSource {
  kThermal = 0,        // mechanical bath force
  kMechBackAction = 1, // radiation-pressure shot force on the mechanics
  kFeedbackShot = 2,   // detection shot noise fed back as force noise
  kFeedbackCross = 3,  // shot-noise/back-action cross correlation
  kAtomColdBath = 4,   // vacuum force on the ensemble
};

inline constexpr std::array<NoiseSource, 5> kAllSources = {
    NoiseSource::kThermal, NoiseSource::kMechBackAction, NoiseSource::kFeedbackShot,
    NoiseSource::kFeedbackCross, NoiseSource::kAtomColdBath};

enum class EvalMode {
  kClosedForm,     // flat-filter expression (feedback responds instantly)
  kCorrelatorSum,  // assembled from force correlators with the finite filter
};

// Force-correlator coefficients with the 2*pi*delta(w+w') factor stripped:
// <A(w) B(w')> = 2*pi*C_AB(w)*delta(w+w'). SI units N^2*s throughout.
struct CorrelatorTable {
  ReducedParams r;
  double mass_m = 1.0;  // kg
  double mass_a = 1.0;  // kg, total ensemble

  double thermal() const;      // mechanical bath, includes vacuum half-quantum
  double back_action() const;  // measurement back-action on the mechanics
  double cold_bath() const;    // ensemble vacuum drive

  // Shot-noise force auto-correlator; real and even in w.
  double shot(double omega) const;

  // Cross correlators between the fed-back shot force and the back-action
  // force, in both operator orderings; complex conjugates of each other.
  Complex shot_cross(double omega) const;       // <F_SN(w) F_BA(w')>
  Complex shot_cross_swapped(double omega) const;  // <F_BA(w) F_SN(w')>

  // Largest relative violation of the conjugation rule
  // <A(w)B(w')> = <B(-w')A(-w)>* across the table at this frequency.
  double conjugation_defect(double omega) const;
};

// Immutable spectrum evaluator. Masses are 1 kg references unless built from
// PhysicalParams; zero-point-normalized outputs are mass-independent.
class SpectrumModel {
 public:
  double s_xx(double omega) const;  // symmetrized position spectral density, m^2*s
  double source_term(NoiseSource s, double omega) const;  // one term of s_xx
  double ds_dG(double omega) const;  // analytic d s_xx / d G at fixed params

  // Dimensionless density rho(z), z = omega/Omega, defined so that
  // <x^2>/x_zp^2 = (2/pi) * integral of rho over the real line.
  double rho(double z) const;
  double rho_source(NoiseSource s, double z) const;
  double drho_dG(double z) const;

  double x_zp_sq() const;   // hbar/(2 M Omega), m^2
  double spring_k() const;  // static cross-spring constant from g, N/m

  const ReducedParams& reduced() const { return r_; }
  EvalMode mode() const { return mode_; }
  double mass_m() const { return mass_m_; }
  double mass_a() const { return mass_a_; }
  bool active(NoiseSource s) const { return active_[static_cast<int>(s)]; }

  // Copy with one source toggled (the model itself is immutable).
  SpectrumModel with_active(NoiseSource s, bool on) const;

  friend SpectrumModel make_model(const ReducedParams& r, EvalMode mode, double mass_m,
                                  double mass_a);

 private:
  SpectrumModel() = default;

  ReducedParams r_;
  EvalMode mode_ = EvalMode::kClosedForm;
  double mass_m_ = 1.0;
  double mass_a_ = 1.0;
  std::array<bool, 5> active_{true, true, true, true, true};

  // Cached dimensionless rates.
  double gm_ = 0.0;   // gamma_m / Omega
  double ga_ = 0.0;   // gamma_a / Omega
  double gg2_ = 0.0;  // (g / Omega)^2
  double phi_ = 0.0;  // Omega / fb_bandwidth in correlator-sum mode, else 0
};

// Throws std::invalid_argument for unstable parameters and for feedback
// without a measurement channel (G > 0 with c_m = 0 or eta = 0).
SpectrumModel make_model(const ReducedParams& r, EvalMode mode = EvalMode::kClosedForm,
                         double mass_m = 1.0, double mass_a = 1.0);

// Physical front-end: reduces and carries the real masses M and N*m_atom.
SpectrumModel make_model(const PhysicalParams& p, EvalMode mode = EvalMode::kClosedForm,
                         params::BathModel bath = params::BathModel::kBose);

// Correlator coefficients for the model's parameters; verifies the
// conjugation rule on a fixed frequency sample (throws std::logic_error).
CorrelatorTable correlators(const SpectrumModel& model);

}  // namespace spectrum
}  // namespace hybridcool

#endif  // HYBRIDCOOL_SPECTRUM_HPP_
