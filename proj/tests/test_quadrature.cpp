#include <doctest.h>

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>

#include <hybridcool/constants.hpp>
#include <hybridcool/quadrature.hpp>
#include <hybridcool/spectrum.hpp>

using namespace hybridcool;
using params::ReducedParams;
using quadrature::PanelPlan;
using quadrature::QuadratureConfig;
using quadrature::ResonanceHint;

namespace {

ReducedParams square_point() {
  ReducedParams r;
  r.Omega = kTwoPi * 220e3;
  r.gamma_m = kTwoPi * 31e-3;
  r.gamma_a = kTwoPi * 1.0;
  r.n_bath = 2.8e4;
  r.c_m = 2.8e4;
  r.c_a = 0.0;
  return r;
}

// Half-line Lorentzian integral in z units; equals pi/(2 gamma) exactly.
double lorentzian_half(double gamma, const QuadratureConfig& config, double* err = nullptr) {
  const std::function<double(double)> f = [gamma](double z) {
    const double o = (1.0 - z) * (1.0 + z);
    return 1.0 / (o * o + gamma * gamma * z * z);
  };
  const ResonanceHint hint{1.0, 0.5 * gamma};
  const PanelPlan plan = quadrature::plan_panels(std::span(&hint, 1), 50.0);
  return quadrature::integrate_half_line(f, plan, config, err);
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("config validation rejects out-of-range settings") {
    QuadratureConfig c;
    CHECK_NOTHROW(c.validate());
    c.rel_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = QuadratureConfig{};
    c.rel_tol = 0.1;  // looser than the supported range
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = QuadratureConfig{};
    c.max_subdivisions = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = QuadratureConfig{};
    c.pole_padding = 2.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("reference pair returns the closed forms") {
    const double Gamma = 123.4, Omega = 5.6e5;
    const auto [i0, i2] = quadrature::lorentzian_integrals(Gamma, Omega);
    CHECK(i0 == doctest::Approx(kPi / (Gamma * Omega * Omega)).epsilon(1e-15));
    CHECK(i2 == doctest::Approx(kPi / Gamma).epsilon(1e-15));
  }

  TEST_CASE("lorentzian integrals are exact over eight decades of width") {
    QuadratureConfig config;
    for (double gamma : {1e-1, 1e-3, 1e-5}) {
      const double v = lorentzian_half(gamma, config);
      CHECK(v == doctest::Approx(kPi / (2.0 * gamma)).epsilon(1e-10));
    }
    // Below width 1e-5 the node-rounding noise floor (~ulp(1)/width per
    // peak) creeps above 1e-10 relative.
    const double v = lorentzian_half(1e-7, config);
    CHECK(v == doctest::Approx(kPi / 2e-7).epsilon(5e-9));
  }

  TEST_CASE("double-precision abscissae limit the narrowest peaks") {
    // At width/center = 1e-9 the peak profile changes across one
    // representable step near z = 1; the induced noise caps the accuracy
    // near 1e-8 relative. Still resolved, just not to full precision.
    QuadratureConfig config;
    const double v = lorentzian_half(1e-9, config);
    CHECK(v == doctest::Approx(kPi / 2e-9).epsilon(5e-8));
  }

  TEST_CASE("extended-precision path recovers the narrowest peaks") {
    QuadratureConfig config;
    for (double gamma : {1e-6, 1e-9}) {
      const std::function<long double(long double)> f = [gamma](long double z) {
        const long double o = (1.0L - z) * (1.0L + z);
        return 1.0L / (o * o + static_cast<long double>(gamma) * gamma * z * z);
      };
      const ResonanceHint hint{1.0, 0.5 * gamma};
      const PanelPlan plan = quadrature::plan_panels(std::span(&hint, 1), 50.0);
      const long double v = quadrature::integrate_half_line_ld(f, plan, config);
      CHECK(static_cast<double>(v) == doctest::Approx(kPi / (2.0 * gamma)).epsilon(1e-10));
    }
  }

  TEST_CASE("plans work in any frequency unit") {
    // Same Lorentzian expressed in rad/s instead of z = w/W units.
    const double W = kTwoPi * 220e3, Gamma = 1e-4 * W;
    const std::function<double(double)> f = [=](double w) {
      const double d = (w - W) * (w + W);
      return 1.0 / (d * d + Gamma * Gamma * w * w);
    };
    const ResonanceHint hint{W, 0.5 * Gamma};
    const PanelPlan plan = quadrature::plan_panels(std::span(&hint, 1), 50.0);
    QuadratureConfig config;
    const double v = 2.0 * quadrature::integrate_half_line(f, plan, config);
    CHECK(v == doctest::Approx(kPi / (Gamma * W * W)).epsilon(1e-10));
  }

  TEST_CASE("panel plan brackets each resonance and starts at zero") {
    const ResonanceHint hints[] = {{1.0, 1e-7}, {0.05, 1e-3}};
    const PanelPlan plan = quadrature::plan_panels(hints, 50.0);
    REQUIRE(plan.edges.size() >= 4);
    CHECK(plan.edges.front() == 0.0);
    for (size_t i = 1; i < plan.edges.size(); ++i) {
      CHECK(plan.edges[i] >= plan.edges[i - 1]);
    }
    CHECK(plan.edges.back() == plan.z_tail);
    // Edges within a few linewidths of each pole center.
    for (const ResonanceHint& h : hints) {
      bool close = false;
      for (double e : plan.edges) {
        if (std::abs(e - h.center) <= 10.0 * h.width) close = true;
      }
      CHECK(close);
    }
    CHECK(plan.z_tail >= 10.0);
  }

  TEST_CASE("an unhinted spike raises the convergence error with a partial value") {
    // A width-1e-9 peak inside a single [0, 10] panel cannot be resolved by
    // bisection alone (it needs ~33 halvings); the failure must be loud.
    const std::function<double(double)> f = [](double z) {
      const double o = (1.0 - z) * (1.0 + z);
      return 1.0 / (o * o + 1e-18 * z * z);
    };
    const PanelPlan plan = quadrature::plan_panels({}, 50.0);
    QuadratureConfig config;
    CHECK_THROWS_AS(quadrature::integrate_half_line(f, plan, config),
                    quadrature::QuadratureError);
    try {
      quadrature::integrate_half_line(f, plan, config);
    } catch (const quadrature::QuadratureError& e) {
      CHECK(std::isfinite(e.partial()));
      CHECK(e.error() > 0.0);
    }
  }

  TEST_CASE("error estimate tightens with the tolerance request") {
    const auto model = spectrum::make_model(square_point());
    QuadratureConfig loose, tight;
    loose.rel_tol = 1e-5;
    tight.rel_tol = 1e-10;
    double err_loose = 0.0, err_tight = 0.0;
    const double v1 = quadrature::variance_zp_total(model, loose, &err_loose);
    const double v2 = quadrature::variance_zp_total(model, tight, &err_tight);
    CHECK(err_tight <= err_loose);
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-5));
  }

  TEST_CASE("accuracy survives a thousandfold narrower mechanical line") {
    // The G = 0 variance is rate-independent (equipartition), so narrowing
    // gamma_m by 1e-3 probes pure quadrature behavior. The narrowed line is
    // 1.4e-10 of the resonance frequency: bisection alone could never find
    // it, so this exercises hint-driven panel placement; accuracy is then
    // set by the node-rounding floor (~ulp(1)/width), not by panel logic.
    ReducedParams r = square_point();
    const double expect = 1.0 + 2.0 * r.n_bath + 2.0 * r.c_m;
    const double e1 = std::abs(
        quadrature::variance_zp_total(spectrum::make_model(r)) / expect - 1.0);
    r.gamma_m *= 1e-3;
    const double e2 = std::abs(
        quadrature::variance_zp_total(spectrum::make_model(r)) / expect - 1.0);
    CHECK(e1 < 1e-9);
    CHECK(e2 < 5e-8);
  }

  TEST_CASE("full-line integral equals the folded half-line") {
    ReducedParams r = square_point();
    r.G = 1e5;
    r.fb_bandwidth = 1e3 * r.Omega;  // finite filter: odd cross term present
    const auto model = spectrum::make_model(r, spectrum::EvalMode::kCorrelatorSum);
    const auto hints = quadrature::spectral_hints(model);
    QuadratureConfig config;
    const std::function<double(double)> f = [&](double z) { return model.rho(z); };
    const double full = quadrature::integrate_full_line(f, hints, config);
    const PanelPlan plan = quadrature::plan_panels(hints, config.pole_padding);
    const std::function<double(double)> folded = [&](double z) {
      return model.rho(z) + model.rho(-z);
    };
    const double half = quadrature::integrate_half_line(folded, plan, config);
    CHECK(full == doctest::Approx(half).epsilon(1e-8));
  }

  TEST_CASE("per-source decomposition adds up to the total variance") {
    ReducedParams r = square_point();
    r.G = 1.58e5;  // near the optimum: all feedback sources active
    const auto model = spectrum::make_model(r);
    const auto report = quadrature::integrate_spectrum(model);
    double sum = 0.0;
    for (double s : report.by_source_zp) sum += s;
    CHECK(report.variance_zp == doctest::Approx(sum).epsilon(1e-12));
    CHECK(report.variance_m2 ==
          doctest::Approx(report.variance_zp * model.x_zp_sq()).epsilon(1e-12));
    CHECK(report.panel_count > 0);
    CHECK(report.error_zp >= 0.0);
  }

  TEST_CASE("derivative integral matches finite differences of the variance") {
    ReducedParams r = square_point();
    r.G = 1e5;
    const auto model = spectrum::make_model(r);
    const double dv = quadrature::variance_derivative(model);
    const double h = 1e-3 * r.G;
    ReducedParams rp = r, rn = r;
    rp.G += h;
    rn.G -= h;
    const double fd = (quadrature::variance_zp_total(spectrum::make_model(rp)) -
                       quadrature::variance_zp_total(spectrum::make_model(rn))) /
                      (2.0 * h);
    CHECK(dv == doctest::Approx(fd).epsilon(1e-5));
  }

  TEST_CASE("spectral hints cover the characteristic roots") {
    ReducedParams r = square_point();
    r.c_a = 40.0;
    r.c_m = 1e3;
    r.gamma_a = 0.02 * r.Omega;
    const auto model = spectrum::make_model(r);
    const auto hints = quadrature::spectral_hints(model);
    CHECK(hints.size() >= 2);
    // The hybridized pair must appear near sqrt(1 -+ 2g/Omega).
    const double gz = r.g() / r.Omega;
    for (double target : {std::sqrt(1.0 - 2.0 * gz), std::sqrt(1.0 + 2.0 * gz)}) {
      bool found = false;
      for (const auto& h : hints) {
        if (std::abs(std::abs(h.center) - target) < 0.02) found = true;
      }
      CHECK(found);
    }
  }
}
