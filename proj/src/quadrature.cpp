#include "hybridcool/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <set>

#include "hybridcool/constants.hpp"
#include "hybridcool/response.hpp"

namespace hybridcool {
namespace quadrature {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// The panel machinery is generic over the working precision: double suffices
// for the physical densities, while exactness checks at width-to-center
// ratios near 1e-9 run into the spacing of representable abscissae around
// the peak (the induced noise scales with ulp/width) and use long double.
template <class Real>
using GK15 = boost::math::quadrature::gauss_kronrod<Real, 15>;

// Single Gauss-Kronrod pass over [a, b]. The library's own recursive driver
// reports leaf errors in leaf-normalized units (inflating them by the
// inverse leaf width), so adaptivity is driven here instead, with the error
// estimate rescaled to absolute units.
template <class Real>
Real gk15_leaf(const std::function<Real(Real)>& f, Real a, Real b, Real* e, Real* l1) {
  Real e_norm = 0;
  const Real v = GK15<Real>::integrate(f, a, b, 0, Real(0), &e_norm, l1);
  *e = e_norm * Real(0.5) * (b - a);
  return v;
}

template <class Real>
struct AdaptAccum {
  Real integral{};
  Real err{};
  Real l1{};
};

template <class Real>
void refine(const std::function<Real(Real)>& f, Real a, Real b, Real abs_tol, int depth,
            AdaptAccum<Real>* acc) {
  Real e = 0, l = 0;
  const Real v = gk15_leaf<Real>(f, a, b, &e, &l);
  using std::abs;
  if (e <= abs_tol || depth <= 0 ||
      !(b - a > Real(4) * std::numeric_limits<Real>::epsilon() *
                    std::max<Real>(abs(a), Real(1)))) {
    acc->integral += v;
    acc->err += e;
    acc->l1 += l;
    return;
  }
  const Real mid = (a + b) / Real(2);
  refine<Real>(f, a, mid, abs_tol / Real(2), depth - 1, acc);
  refine<Real>(f, mid, b, abs_tol / Real(2), depth - 1, acc);
}

// One adaptive pass over [a, b]; accumulates the L1 norm for the
// convergence check (errors are judged against it, so integrands with
// internal cancellation are not held to an impossible relative target).
template <class Real>
Real panel_integral(const std::function<Real(Real)>& f, Real a, Real b,
                    const QuadratureConfig& config, Real* err, Real* l1) {
  Real e = 0, l = 0;
  const Real v = gk15_leaf<Real>(f, a, b, &e, &l);
  // Per-panel target two orders tighter than the global one so the summed
  // estimate stays within budget; the budget is set by this panel's own mass.
  const Real abs_tol = Real(config.rel_tol) * Real(1e-2) * l;
  if (e <= abs_tol || l == Real(0)) {
    if (err) *err = e;
    if (l1) *l1 += l;
    return v;
  }
  AdaptAccum<Real> acc;
  const Real mid = (a + b) / Real(2);
  refine<Real>(f, a, mid, abs_tol / Real(2), config.max_subdivisions - 1, &acc);
  refine<Real>(f, mid, b, abs_tol / Real(2), config.max_subdivisions - 1, &acc);
  if (err) *err = acc.err;
  if (l1) *l1 += acc.l1;
  return acc.integral;
}

template <class Real>
Real half_line_impl(const std::function<Real(Real)>& f, const PanelPlan& plan,
                    const QuadratureConfig& config, Real* err, int* panels) {
  config.validate();
  Real total = 0, err_total = 0, l1_total = 0;
  int count = 0;
  for (size_t i = 0; i + 1 < plan.edges.size(); ++i) {
    const Real a = Real(plan.edges[i]), b = Real(plan.edges[i + 1]);
    if (!(b > a)) continue;
    Real e = 0;
    total += panel_integral<Real>(f, a, b, config, &e, &l1_total);
    err_total += e;
    ++count;
  }
  // Tail beyond z_tail via u = 1/z; Gauss-Kronrod nodes never touch u = 0.
  const Real zt = Real(plan.z_tail);
  const std::function<Real(Real)> tail = [&f, zt](Real u) {
    const Real z = Real(1) / u;
    return f(z) * z * z;
  };
  Real e = 0;
  total += panel_integral<Real>(tail, Real(0), Real(1) / zt, config, &e, &l1_total);
  err_total += e;
  ++count;

  if (err) *err = err_total;
  if (panels) *panels = count;
  if (err_total > std::max<Real>(Real(config.rel_tol) * l1_total, Real(config.abs_floor)) &&
      err_total > Real(0)) {
    throw QuadratureError("quadrature failed to reach the requested tolerance",
                          static_cast<double>(total), static_cast<double>(err_total));
  }
  return total;
}

}  // namespace

void QuadratureConfig::validate() const {
  require(std::isfinite(rel_tol) && rel_tol > 0.0 && rel_tol <= 1e-2,
          "rel_tol must lie in (0, 1e-2]");
  require(std::isfinite(abs_floor) && abs_floor >= 0.0, "abs_floor must be nonnegative");
  require(max_subdivisions >= 1, "max_subdivisions must be at least 1");
  require(std::isfinite(pole_padding) && pole_padding >= 10.0,
          "pole_padding must be at least 10");
}

PanelPlan plan_panels(std::span<const ResonanceHint> hints, double pole_padding) {
  std::set<double> pts;
  double zmax = 0.0;
  for (const ResonanceHint& h : hints) {
    const double c = std::abs(h.center);
    const double w = std::abs(h.width);
    // A structure this wide and this far off axis leaves no sharp feature on
    // the integration path.
    if (w > 2.0 && w > 0.75 * c) continue;
    // Structured region around the pole; the wings fall off like
    // 1/(z-c)^2 out to a distance of order the center itself, so the cap
    // scales with the center (the plan works in any frequency unit).
    const double cap = std::max(0.75 * c, 0.2 * std::max(c, 1.0));
    double hw = std::min(pole_padding * w, cap);
    if (hw <= 0.0) hw = std::min(1e-3 * std::max(c, 1.0), cap);
    // Geometric ladder of breakpoints so each panel spans at most one
    // decade of distance from the pole (peak-to-linewidth ratios reach
    // ~1e7; uniform panels cannot grade that).
    std::set<double> offsets = {hw, cap};
    for (double o = w; o > 0.0 && o < cap; o *= 10.0) offsets.insert(o);
    pts.insert(c);
    for (double o : offsets) {
      if (c - o > 0.0) pts.insert(c - o);
      pts.insert(c + o);
    }
    pts.insert(std::max(c - cap, 0.0));
    zmax = std::max(zmax, c + cap);
  }
  PanelPlan plan;
  plan.z_tail = std::max(10.0, 2.0 * zmax);
  pts.insert(0.0);
  pts.insert(plan.z_tail);
  for (double x : pts) {
    if (x <= plan.z_tail) plan.edges.push_back(x);
  }
  return plan;
}

double integrate_half_line(const std::function<double(double)>& f, const PanelPlan& plan,
                           const QuadratureConfig& config, double* err, int* panels) {
  return half_line_impl<double>(f, plan, config, err, panels);
}

long double integrate_half_line_ld(const std::function<long double(long double)>& f,
                                   const PanelPlan& plan, const QuadratureConfig& config,
                                   long double* err, int* panels) {
  return half_line_impl<long double>(f, plan, config, err, panels);
}

double integrate_full_line(const std::function<double(double)>& f,
                           std::span<const ResonanceHint> hints,
                           const QuadratureConfig& config, double* err, int* panels) {
  config.validate();
  const PanelPlan plan = plan_panels(hints, config.pole_padding);
  double total = 0.0, err_total = 0.0, l1_total = 0.0;
  int count = 0;
  for (size_t i = 0; i + 1 < plan.edges.size(); ++i) {
    const double a = plan.edges[i], b = plan.edges[i + 1];
    if (!(b > a)) continue;
    for (double sign : {1.0, -1.0}) {
      double e = 0.0;
      const std::function<double(double)> seg = [&f, sign](double z) { return f(sign * z); };
      total += panel_integral<double>(seg, a, b, config, &e, &l1_total);
      err_total += e;
      ++count;
    }
  }
  const double zt = plan.z_tail;
  for (double sign : {1.0, -1.0}) {
    const std::function<double(double)> tail = [&f, sign, zt](double u) {
      const double z = sign / u;
      return f(z) * z * z;
    };
    double e = 0.0;
    total += panel_integral<double>(tail, 0.0, 1.0 / zt, config, &e, &l1_total);
    err_total += e;
    ++count;
  }
  if (err) *err = err_total;
  if (panels) *panels = count;
  if (err_total > std::max(config.rel_tol * l1_total, config.abs_floor) &&
      err_total > 0.0) {
    throw QuadratureError("quadrature failed to reach the requested tolerance", total,
                          err_total);
  }
  return total;
}

std::vector<ResonanceHint> spectral_hints(const spectrum::SpectrumModel& model) {
  using spectrum::EvalMode;
  params::ReducedParams r = model.reduced();
  // The closed-form mode evaluates the flat-filter expression, so its panel
  // geometry must ignore the filter pole as well.
  if (model.mode() == EvalMode::kClosedForm) {
    r.fb_bandwidth = std::numeric_limits<double>::infinity();
  }
  std::vector<ResonanceHint> hints;
  for (const auto& root : response::denominator_roots(r)) {
    hints.push_back({root.real(), root.imag()});
  }
  // Bare ensemble resonance: a numerator zero of the density, equally sharp.
  const double ga = r.gamma_a / r.Omega;
  const double disc = 1.0 - 0.25 * ga * ga;
  if (disc > 0.0) hints.push_back({std::sqrt(disc), 0.5 * ga});
  return hints;
}

namespace {

// Folded even part of a per-source or total density.
template <typename Density>
double half_line_variance(Density density, const PanelPlan& plan,
                          const QuadratureConfig& config, double* err, int* panels) {
  const auto fe = [&density](double z) { return density(z) + density(-z); };
  const double integral = integrate_half_line(fe, plan, config, err, panels);
  return integral * 2.0 / kPi;
}

}  // namespace

double variance_zp_total(const spectrum::SpectrumModel& model,
                         const QuadratureConfig& config, double* err, int* panels) {
  config.validate();
  const PanelPlan plan = plan_panels(spectral_hints(model), config.pole_padding);
  double e = 0.0;
  int n = 0;
  const double v = half_line_variance(
      [&model](double z) { return model.rho(z); }, plan, config, &e, &n);
  if (err) *err = e * 2.0 / kPi;
  if (panels) *panels = n;
  return v;
}

VarianceReport integrate_spectrum(const spectrum::SpectrumModel& model,
                                  const QuadratureConfig& config) {
  config.validate();
  const PanelPlan plan = plan_panels(spectral_hints(model), config.pole_padding);
  VarianceReport report;
  for (spectrum::NoiseSource s : spectrum::kAllSources) {
    const int idx = static_cast<int>(s);
    if (!model.active(s)) {
      report.by_source_zp[idx] = 0.0;
      continue;
    }
    double e = 0.0;
    int n = 0;
    report.by_source_zp[idx] = half_line_variance(
        [&model, s](double z) { return model.rho_source(s, z); }, plan, config, &e, &n);
    report.error_zp += e * 2.0 / kPi;
    report.panel_count += n;
  }
  for (double v : report.by_source_zp) report.variance_zp += v;
  report.variance_m2 = report.variance_zp * model.x_zp_sq();
  report.regime = params::classify(model.reduced());
  return report;
}

double variance_derivative(const spectrum::SpectrumModel& model,
                           const QuadratureConfig& config, double* err) {
  config.validate();
  const PanelPlan plan = plan_panels(spectral_hints(model), config.pole_padding);
  double e = 0.0;
  int n = 0;
  const double v = half_line_variance(
      [&model](double z) { return model.drho_dG(z); }, plan, config, &e, &n);
  if (err) *err = e * 2.0 / kPi;
  return v;
}

std::pair<double, double> lorentzian_integrals(double Gamma, double Omega) {
  require(std::isfinite(Gamma) && Gamma > 0.0, "Gamma must be positive");
  require(std::isfinite(Omega) && Omega > 0.0, "Omega must be positive");
  return {kPi / (Gamma * Omega * Omega), kPi / Gamma};
}

}  // namespace quadrature
}  // namespace hybridcool
