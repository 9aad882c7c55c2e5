#ifndef HYBRIDCOOL_RESPONSE_HPP_
#define HYBRIDCOOL_RESPONSE_HPP_

#include <complex>
#include <utility>
#include <vector>

#include "hybridcool/params.hpp"

namespace hybridcool {
namespace response {

using Complex = std::complex<double>;
using params::ReducedParams;

enum class ResponseKind {
  kMechanical,      // bare oscillator
  kAtomic,          // bare ensemble centre of mass
  kModified,        // mechanics dressed by feedback and the ensemble
  kNormalModePlus,  // symmetric hybrid mode approximant
  kNormalModeMinus, // antisymmetric hybrid mode approximant
};

// Evaluatable response: omega (rad/s) -> complex amplitude per unit force
// (s^2/kg). Masses default to 1 kg references; zero-point-normalized results
// of downstream modules do not depend on them.
struct Susceptibility {
  ResponseKind kind = ResponseKind::kMechanical;
  ReducedParams r;
  double mass_m = 1.0;  // mechanical mass, kg
  double mass_a = 1.0;  // total ensemble mass N*m_atom, kg

  Complex operator()(double omega) const;
};

Susceptibility make_susceptibility(ResponseKind kind, const ReducedParams& r,
                                   double mass_m = 1.0, double mass_a = 1.0);

// Bare mechanical response 1/(M(Omega^2 - w^2 - i w Gamma_m)).
Complex chi_m(const ReducedParams& r, double omega, double mass_m = 1.0);

// Bare ensemble response 1/(Nm(Omega^2 - w^2 - i w Gamma_a)).
Complex chi_a(const ReducedParams& r, double omega, double mass_a = 1.0);

// Feedback filter 1/(1 - i w / fb_bandwidth); exactly 1 in the unfiltered mode.
Complex feedback_filter(const ReducedParams& r, double omega);

// Mechanical response with the derivative feedback loop closed and the
// ensemble spring eliminated: chi' = [chi_m^-1 - i w G M Gamma_m f - K^2 chi_a]^-1.
Complex chi_m_prime(const ReducedParams& r, double omega, double mass_m = 1.0);

// Hybridized-mode approximants (+, -): valid for g >> Gamma_N, no feedback.
std::pair<Complex, Complex> chi_normal_modes(const ReducedParams& r, double omega,
                                             double mass_m = 1.0);

// Dimensionless frequency-domain building blocks in z = omega/Omega.
// chi'_m(omega) = da(z) f(z) / (M Omega^2 p(z)).
namespace zspace {

// Filter lag parameter Omega / fb_bandwidth (0 in the unfiltered mode).
inline double phi(const ReducedParams& r) {
  return r.fb_infinite() ? 0.0 : r.Omega / r.fb_bandwidth;
}

// 1 - z^2 in factored form: near z = 1 the direct difference loses the
// digits that set a narrow resonance's profile, while (1 - z)(1 + z) is
// exact to rounding for any z.
inline double one_minus_sq(double z) { return (1.0 - z) * (1.0 + z); }

inline Complex dm(const ReducedParams& r, double z) {
  return {one_minus_sq(z), -z * r.gamma_m / r.Omega};
}

inline Complex da(const ReducedParams& r, double z) {
  return {one_minus_sq(z), -z * r.gamma_a / r.Omega};
}

inline Complex f(const ReducedParams& r, double z) { return {1.0, -z * phi(r)}; }

// Characteristic polynomial p(z) = dm da f - i z G (gamma_m/Omega) da - 4 (g/Omega)^2 f.
Complex p(const ReducedParams& r, double z);

}  // namespace zspace

// Ascending coefficients of the characteristic polynomial in z; degree 4 in
// the unfiltered mode, degree 5 with a finite filter bandwidth.
std::vector<Complex> denominator_coeffs(const ReducedParams& r);

// All roots of the characteristic polynomial (companion-matrix eigenvalues).
std::vector<Complex> denominator_roots(const ReducedParams& r);

}  // namespace response
}  // namespace hybridcool

#endif  // HYBRIDCOOL_RESPONSE_HPP_
