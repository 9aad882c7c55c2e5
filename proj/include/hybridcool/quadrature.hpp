#ifndef HYBRIDCOOL_QUADRATURE_HPP_
#define HYBRIDCOOL_QUADRATURE_HPP_

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hybridcool/params.hpp"
#include "hybridcool/spectrum.hpp"

namespace hybridcool {
namespace quadrature {

struct QuadratureConfig {
  // Target error relative to the integrand's L1 norm (equals the plain
  // relative error for one-signed integrands).
  double rel_tol = 1e-8;
  double abs_floor = 0.0;     // error accepted regardless of relative target
  int max_subdivisions = 15;  // adaptive bisection depth per panel
  double pole_padding = 50.0; // panel half-width in units of pole imaginary part

  void validate() const;  // throws std::invalid_argument
};

// A resonance of the integrand in its own abscissa: |center| locates it,
// |width| sets the scale over which it varies.
struct ResonanceHint {
  double center = 0.0;
  double width = 0.0;
};

// Ascending panel edges on [0, z_tail]; the tail beyond z_tail is integrated
// with the inverse substitution u = 1/z.
struct PanelPlan {
  std::vector<double> edges;
  double z_tail = 0.0;
};

PanelPlan plan_panels(std::span<const ResonanceHint> hints, double pole_padding);

// Thrown when the error estimate misses the requested tolerance; carries the
// partial result so callers can still inspect it.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double partial, double error)
      : std::runtime_error(msg), partial_(partial), error_(error) {}
  double partial() const { return partial_; }
  double error() const { return error_; }

 private:
  double partial_;
  double error_;
};

// Integral of f over [0, infinity) using the plan's panels plus the inverse
// tail. err/panels, when non-null, receive the error estimate and the number
// of top-level panels integrated.
double integrate_half_line(const std::function<double(double)>& f, const PanelPlan& plan,
                           const QuadratureConfig& config, double* err = nullptr,
                           int* panels = nullptr);

// Extended-precision variant of integrate_half_line. Peaks whose width is
// below ~1e-7 of their center put double-precision abscissae on a grid
// coarse enough that the sampled profile acquires relative noise of order
// ulp / width; the wider long double mantissa moves that floor down by
// three orders of magnitude.
long double integrate_half_line_ld(const std::function<long double(long double)>& f,
                                   const PanelPlan& plan, const QuadratureConfig& config,
                                   long double* err = nullptr, int* panels = nullptr);

// Integral of f over the whole real line with mirrored panels (no evenness
// assumption); hints are interpreted as +/- pairs.
double integrate_full_line(const std::function<double(double)>& f,
                           std::span<const ResonanceHint> hints,
                           const QuadratureConfig& config, double* err = nullptr,
                           int* panels = nullptr);

struct VarianceReport {
  double variance_m2 = 0.0;  // with the model's mass scale
  double variance_zp = 0.0;  // in units of x_zp^2 = hbar/(2 M Omega)
  std::array<double, 5> by_source_zp{};  // indexed by NoiseSource
  double error_zp = 0.0;
  int panel_count = 0;
  params::RegimeLabel regime;
};

// Steady-state variance <x^2> = (1/2pi) Int S_xx dw with per-source
// decomposition. Throws QuadratureError on non-convergence.
VarianceReport integrate_spectrum(const spectrum::SpectrumModel& model,
                                  const QuadratureConfig& config = {});

// Total variance only (single pass over all active sources); the optimizer's
// inner loop. Same convergence contract as integrate_spectrum.
double variance_zp_total(const spectrum::SpectrumModel& model,
                         const QuadratureConfig& config = {}, double* err = nullptr,
                         int* panels = nullptr);

// d(variance_zp)/dG at the model's gain, from the analytic integrand.
// err, when non-null, receives the error estimate (the resolvable floor for
// root-finding on this derivative).
double variance_derivative(const spectrum::SpectrumModel& model,
                           const QuadratureConfig& config = {}, double* err = nullptr);

// Resonance hints for a model's density in z = omega/Omega: characteristic-
// polynomial roots plus the bare ensemble resonance.
std::vector<ResonanceHint> spectral_hints(const spectrum::SpectrumModel& model);

// Exact references Int dw/((w^2-W^2)^2+G^2 w^2) = pi/(G W^2) and the
// w^2-weighted variant pi/G, over the full real line.
std::pair<double, double> lorentzian_integrals(double Gamma, double Omega);

}  // namespace quadrature
}  // namespace hybridcool

#endif  // HYBRIDCOOL_QUADRATURE_HPP_
