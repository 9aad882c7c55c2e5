#include "hybridcool/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "hybridcool/constants.hpp"
#include "hybridcool/response.hpp"

namespace hybridcool {
namespace spectrum {

namespace {

double norm2(Complex v) { return std::norm(v); }

}  // namespace

double CorrelatorTable::thermal() const {
  return 2.0 * kHbar * r.gamma_m * mass_m * r.Omega * (r.n_bath + 0.5);
}

double CorrelatorTable::back_action() const {
  return 2.0 * kHbar * r.gamma_m * mass_m * r.Omega * r.c_m;
}

double CorrelatorTable::cold_bath() const {
  // Vacuum drive on the ensemble: occupancy 0, half-quantum only.
  return kHbar * r.gamma_a * mass_a * r.Omega;
}

double CorrelatorTable::shot(double omega) const {
  if (r.G == 0.0) return 0.0;
  const double z = omega / r.Omega;
  const Complex f = response::feedback_filter(r, omega);  // 1/(1 - i w/dw)
  return 2.0 * kHbar * r.gamma_m * mass_m * r.Omega * (r.G * r.G / (16.0 * r.eta * r.c_m)) *
         z * z * norm2(f);
}

Complex CorrelatorTable::shot_cross(double omega) const {
  if (r.G == 0.0) return {0.0, 0.0};
  const double z = omega / r.Omega;
  const Complex f = response::feedback_filter(r, omega);
  return 2.0 * kHbar * r.gamma_m * mass_m * r.Omega * (r.G / 4.0) * z * f;
}

Complex CorrelatorTable::shot_cross_swapped(double omega) const {
  if (r.G == 0.0) return {0.0, 0.0};
  // Independent ordering: the filtered force acts on the retarded side, so
  // the filter enters conjugated. Equals conj(shot_cross) identically.
  const double z = omega / r.Omega;
  const Complex f = response::feedback_filter(r, omega);
  return 2.0 * kHbar * r.gamma_m * mass_m * r.Omega * (r.G / 4.0) * z * std::conj(f);
}

double CorrelatorTable::conjugation_defect(double omega) const {
  double worst = 0.0;
  const Complex a = shot_cross(omega);
  const Complex b = shot_cross_swapped(omega);
  const double scale_ab = std::max(std::abs(a), 1e-300);
  worst = std::max(worst, std::abs(a - std::conj(b)) / scale_ab);
  // Auto-correlators must be real and even.
  const double s1 = shot(omega), s2 = shot(-omega);
  worst = std::max(worst, std::abs(s1 - s2) / std::max(std::abs(s1), 1e-300));
  return worst;
}

SpectrumModel make_model(const ReducedParams& r, EvalMode mode, double mass_m,
                         double mass_a) {
  r.validate();
  if (!params::stability(r)) {
    throw std::invalid_argument("unstable parameters: no stationary spectrum");
  }
  if (r.G > 0.0 && (r.c_m == 0.0 || r.eta == 0.0)) {
    throw std::invalid_argument("feedback without measurement channel");
  }
  if (!(mass_m > 0.0) || !(mass_a > 0.0)) {
    throw std::invalid_argument("masses must be positive");
  }
  SpectrumModel m;
  m.r_ = r;
  m.mode_ = mode;
  m.mass_m_ = mass_m;
  m.mass_a_ = mass_a;
  m.gm_ = r.gamma_m / r.Omega;
  m.ga_ = r.gamma_a / r.Omega;
  const double gg = r.g() / r.Omega;
  m.gg2_ = gg * gg;
  m.phi_ = (mode == EvalMode::kCorrelatorSum) ? response::zspace::phi(r) : 0.0;
  return m;
}

SpectrumModel make_model(const PhysicalParams& p, EvalMode mode, params::BathModel bath) {
  const ReducedParams r = params::reduce(p, bath);
  return make_model(r, mode, p.M, p.N * p.m_atom);
}

SpectrumModel SpectrumModel::with_active(NoiseSource s, bool on) const {
  SpectrumModel copy = *this;
  copy.active_[static_cast<int>(s)] = on;
  return copy;
}

double SpectrumModel::x_zp_sq() const { return kHbar / (2.0 * mass_m_ * r_.Omega); }

double SpectrumModel::spring_k() const {
  // Reconstructed from g so the reduced parameterization stays closed.
  return 2.0 * r_.g() * r_.Omega * std::sqrt(mass_m_ * mass_a_);
}

// Dimensionless per-source density at the model's filter setting; the
// closed-form mode has phi_ = 0 (instant feedback response).
double SpectrumModel::rho_source(NoiseSource s, double z) const {
  const double omega = z * r_.Omega;
  if (mode_ == EvalMode::kCorrelatorSum) {
    // Independent path: SI correlator assembly scaled back to density units.
    return source_term(s, omega) * r_.Omega / (4.0 * x_zp_sq());
  }
  const double omsq = response::zspace::one_minus_sq(z);
  const Complex dm{omsq, -z * gm_};
  const Complex da{omsq, -z * ga_};
  const Complex f{1.0, -z * phi_};
  const Complex p = dm * da * f - Complex{0.0, 1.0} * (z * r_.G * gm_) * da -
                    4.0 * gg2_ * f;
  const double inv_p2 = 1.0 / norm2(p);
  const double da2 = norm2(da);
  const double f2 = norm2(f);
  switch (s) {
    case NoiseSource::kThermal:
      return gm_ * (r_.n_bath + 0.5) * f2 * da2 * inv_p2;
    case NoiseSource::kMechBackAction:
      return gm_ * r_.c_m * f2 * da2 * inv_p2;
    case NoiseSource::kFeedbackShot:
      if (r_.G == 0.0) return 0.0;
      return gm_ * (r_.G * r_.G / (16.0 * r_.eta * r_.c_m)) * z * z * da2 * inv_p2;
    case NoiseSource::kFeedbackCross:
      if (r_.G == 0.0) return 0.0;
      return gm_ * (r_.G / 4.0) * z * da2 * inv_p2;
    case NoiseSource::kAtomColdBath:
      return 2.0 * gg2_ * ga_ * f2 * inv_p2;
  }
  throw std::logic_error("unknown noise source");
}

double SpectrumModel::rho(double z) const {
  if (mode_ == EvalMode::kCorrelatorSum) {
    return s_xx(z * r_.Omega) * r_.Omega / (4.0 * x_zp_sq());
  }
  double total = 0.0;
  for (NoiseSource s : kAllSources) {
    if (active_[static_cast<int>(s)]) total += rho_source(s, z);
  }
  return total;
}

double SpectrumModel::source_term(NoiseSource s, double omega) const {
  if (mode_ == EvalMode::kClosedForm) {
    return rho_source(s, omega / r_.Omega) * 4.0 * x_zp_sq() / r_.Omega;
  }
  const CorrelatorTable t{r_, mass_m_, mass_a_};
  const Complex chi_p = response::chi_m_prime(r_, omega, mass_m_);
  const double transfer = norm2(chi_p);
  switch (s) {
    case NoiseSource::kThermal:
      return transfer * t.thermal();
    case NoiseSource::kMechBackAction:
      return transfer * t.back_action();
    case NoiseSource::kFeedbackShot:
      return transfer * t.shot(omega);
    case NoiseSource::kFeedbackCross:
      // The complex cross correlator contributes through its Hermitian part,
      // entering the real spectrum exactly once.
      return transfer * std::real(t.shot_cross(omega));
    case NoiseSource::kAtomColdBath: {
      const Complex chi_atom = response::chi_a(r_, omega, mass_a_);
      const double k_spring = spring_k();
      return transfer * k_spring * k_spring * norm2(chi_atom) * t.cold_bath();
    }
  }
  throw std::logic_error("unknown noise source");
}

double SpectrumModel::s_xx(double omega) const {
  if (mode_ == EvalMode::kClosedForm) {
    return rho(omega / r_.Omega) * 4.0 * x_zp_sq() / r_.Omega;
  }
  double total = 0.0;
  for (NoiseSource s : kAllSources) {
    if (active_[static_cast<int>(s)]) total += source_term(s, omega);
  }
  return total;
}

double SpectrumModel::drho_dG(double z) const {
  const double omsq = response::zspace::one_minus_sq(z);
  const Complex dm{omsq, -z * gm_};
  const Complex da{omsq, -z * ga_};
  const Complex f{1.0, -z * phi_};
  const Complex dp_dG = Complex{0.0, -1.0} * (z * gm_) * da;  // d p / d G
  const Complex p = dm * da * f + r_.G * dp_dG - 4.0 * gg2_ * f;
  const double inv_p2 = 1.0 / norm2(p);
  const double da2 = norm2(da);
  const double f2 = norm2(f);
  const bool measured = r_.c_m > 0.0 && r_.eta > 0.0;
  const double k_sn = measured ? gm_ / (16.0 * r_.eta * r_.c_m) : 0.0;

  double num = 0.0, num_G = 0.0;
  if (active(NoiseSource::kThermal)) num += gm_ * (r_.n_bath + 0.5) * f2 * da2;
  if (active(NoiseSource::kMechBackAction)) num += gm_ * r_.c_m * f2 * da2;
  if (active(NoiseSource::kFeedbackShot)) {
    num += k_sn * r_.G * r_.G * z * z * da2;
    num_G += 2.0 * k_sn * r_.G * z * z * da2;
  }
  if (active(NoiseSource::kFeedbackCross)) {
    num += gm_ * (r_.G / 4.0) * z * da2;
    num_G += gm_ * (z / 4.0) * da2;
  }
  if (active(NoiseSource::kAtomColdBath)) num += 2.0 * gg2_ * ga_ * f2;

  const double dnorm_dG = 2.0 * std::real(std::conj(p) * dp_dG);
  return (num_G - num * dnorm_dG * inv_p2) * inv_p2;
}

double SpectrumModel::ds_dG(double omega) const {
  return drho_dG(omega / r_.Omega) * 4.0 * x_zp_sq() / r_.Omega;
}

CorrelatorTable correlators(const SpectrumModel& model) {
  CorrelatorTable t{model.reduced(), model.mass_m(), model.mass_a()};
  for (double z : {0.3, 1.0, 7.7}) {
    if (t.conjugation_defect(z * model.reduced().Omega) > 1e-12) {
      throw std::logic_error("correlator conjugation symmetry violated");
    }
  }
  return t;
}

}  // namespace spectrum
}  // namespace hybridcool
