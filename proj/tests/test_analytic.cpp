#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <hybridcool/analytic.hpp>
#include <hybridcool/constants.hpp>
#include <hybridcool/covariance.hpp>
#include <hybridcool/params.hpp>

using namespace hybridcool;
using params::ReducedParams;

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

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("zero-order optimal gain matches its defining formula") {
    const ReducedParams r = square_point();
    const double expect =
        std::sqrt(1.0 + 16.0 * r.eta * r.c_m * (r.n_bath + r.c_m + 0.5)) - 1.0;
    CHECK(analytic::optimal_gain_zero_order(r) ==
          doctest::Approx(expect).epsilon(1e-15));
    CHECK(analytic::optimal_gain_zero_order(r) ==
          doctest::Approx(158391.626094).epsilon(1e-9));
  }

  TEST_CASE("feedback-only optimum ties variance to gain") {
    ReducedParams r = square_point();
    r.eta = 0.8;
    const auto pred = analytic::feedback_only_optimum(r);
    CHECK(pred.regime == analytic::PredictionRegime::kFeedbackOnly);
    CHECK(pred.variance_zp ==
          doctest::Approx(pred.g_opt0 / (4.0 * r.eta * r.c_m)).epsilon(1e-15));
    CHECK(pred.g_opt0 == analytic::optimal_gain_zero_order(r));
    CHECK(pred.snr == doctest::Approx(16.0 * r.eta * r.c_m *
                                      (r.n_bath + r.c_m + 0.5)).epsilon(1e-15));

    ReducedParams bad = square_point();
    bad.c_m = 0.0;
    CHECK_THROWS_AS(analytic::feedback_only_optimum(bad), std::invalid_argument);
    bad = square_point();
    bad.eta = 0.0;
    CHECK_THROWS_AS(analytic::feedback_only_optimum(bad), std::invalid_argument);
  }

  TEST_CASE("weak-coupling form and its effective occupancy") {
    ReducedParams r = square_point();
    r.c_a = 100.0;  // c = 16 c_a c_m
    r.gamma_a = 0.3 * r.Omega;
    const auto pred = analytic::weak_coupling_variance(r);
    const double c = r.c();
    const double n_a = (c / 2.0) / (1.0 + (r.gamma_m / r.gamma_a) * (1.0 + c));
    const double expect = 2.0 * (r.n_bath + r.c_m + 0.5 + n_a) / (1.0 + c);
    CHECK(pred.variance_zp == doctest::Approx(expect).epsilon(1e-14));
    CHECK(pred.n_a_eff == doctest::Approx(n_a).epsilon(1e-14));
    CHECK(pred.regime == analytic::PredictionRegime::kWeakCoupling);
    // Validity flag requires gamma_a >= 10 g.
    CHECK(pred.flag_weak == (r.gamma_a >= 10.0 * r.g()));
  }

  TEST_CASE("strong-coupling form diverges at the instability") {
    ReducedParams r = square_point();
    r.gamma_a = 100.0 * r.gamma_m;
    r.c_m = 1e4;
    r.c_a = 5e3;
    REQUIRE(params::stability(r));
    const auto pred = analytic::strong_coupling_variance(r);
    const double gn = 0.5 * (r.gamma_a + r.gamma_m);
    const double expect = ((r.gamma_m / gn) * (r.n_bath + r.c_m) + 1.0) /
                          (1.0 - 4.0 * r.g() * r.g() / (r.Omega * r.Omega));
    CHECK(pred.variance_zp == doctest::Approx(expect).epsilon(1e-14));
    CHECK(pred.gamma_n == doctest::Approx(gn).epsilon(1e-15));
    CHECK(pred.regime == analytic::PredictionRegime::kStrongCoupling);

    // Push past g = Omega/2: must refuse rather than return a negative value.
    ReducedParams bad = r;
    bad.c_a = 1e9;
    CHECK_THROWS_AS(analytic::strong_coupling_variance(bad), std::invalid_argument);
  }

  TEST_CASE("validity flags switch at the documented rate hierarchies") {
    ReducedParams r = square_point();
    r.gamma_a = 0.01 * r.Omega;
    r.c_a = 1.0;
    {
      const auto p = analytic::weak_coupling_variance(r);
      CHECK(p.flag_weak == (r.gamma_a >= 10.0 * r.g()));
      CHECK(p.flag_hierarchy == (r.gamma_a >= 10.0 * r.gamma_m));
    }
    {
      const auto p = analytic::strong_coupling_variance(r);
      CHECK(p.flag_strong ==
            (r.g() >= 10.0 * std::max(r.gamma_a, r.gamma_m)));
      CHECK(p.flag_stable == params::stability(r));
    }
  }

  TEST_CASE("exact zero-gain form matches the covariance solver everywhere") {
    // Valid in both the weak and the strong regime, so cross-check both.
    ReducedParams weak = square_point();
    weak.c_a = 3.0;
    weak.gamma_a = 0.2 * weak.Omega;
    ReducedParams strong = square_point();
    strong.gamma_a = 50.0 * strong.gamma_m;
    strong.c_m = 2e4;
    strong.c_a = 1e4;
    for (const ReducedParams& r : {weak, strong}) {
      REQUIRE(params::stability(r));
      const double exact = analytic::sympathetic_variance_exact(r);
      CHECK(exact ==
            doctest::Approx(covariance::oracle_variance_zp(r)).epsilon(1e-10));
    }

    ReducedParams bad = weak;
    bad.G = 1.0;
    CHECK_THROWS_AS(analytic::sympathetic_variance_exact(bad), std::invalid_argument);
  }

  TEST_CASE("exact form reduces to the strong-coupling limit when rates allow") {
    ReducedParams r = square_point();
    r.gamma_a = 1000.0 * r.gamma_m;
    r.c_m = 1e4;
    r.c_a = 2e4;  // g about 0.13 Omega, far above both damping rates
    REQUIRE(r.g() > 10.0 * r.gamma_a);
    const double exact = analytic::sympathetic_variance_exact(r);
    const double strong = analytic::strong_coupling_variance(r).variance_zp;
    CHECK(exact == doctest::Approx(strong).epsilon(1e-2));
  }

  TEST_CASE("ground-state margins are strict at their boundaries") {
    ReducedParams r = square_point();
    r.eta = 0.9;
    // Feedback criterion boundary: n_bath exactly (9 eta - 1) c_m.
    r.n_bath = (9.0 * r.eta - 1.0) * r.c_m;
    auto crit = analytic::ground_state_criteria(r);
    CHECK(crit.feedback_margin == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(crit.feedback);
    r.n_bath *= 0.5;
    crit = analytic::ground_state_criteria(r);
    CHECK(crit.feedback);
    CHECK(crit.feedback_margin > 1.0);
  }

  TEST_CASE("sympathetic criteria agree with the regime classifier") {
    ReducedParams r = square_point();
    r.n_bath = 1e3;
    r.c_m = 10.0;
    r.c_a = 50.0;
    r.gamma_a = kTwoPi * 5e3;
    const auto crit = analytic::ground_state_criteria(r);
    const auto label = params::classify(r);
    CHECK(crit.sympathetic == label.sympathetic());
    CHECK(crit.symp_occupancy == label.cond_nbath_lt_c);
    CHECK(crit.symp_cooperativity == label.cond_ca_gt_1_24);
    CHECK(crit.symp_rate == label.cond_rate_hierarchy);
    // Margins above one exactly when the flags hold.
    CHECK((crit.symp_occupancy_margin > 1.0) == crit.symp_occupancy);
    CHECK((crit.symp_cooperativity_margin > 1.0) == crit.symp_cooperativity);
    CHECK((crit.symp_rate_margin > 1.0) == crit.symp_rate);
  }

  TEST_CASE("sufficient sympathetic condition is tighter than the basic set") {
    ReducedParams r = square_point();
    r.n_bath = 1e2;
    r.c_m = 1.0;
    r.c_a = 100.0;
    r.gamma_a = kTwoPi * 1e4;
    const auto crit = analytic::ground_state_criteria(r);
    if (crit.sufficient_sympathetic) CHECK(crit.sympathetic);
    const double n_a = analytic::weak_coupling_variance(r).n_a_eff;
    const bool expect =
        r.n_bath < (2.0 + 3.0 * r.gamma_m / r.gamma_a) * n_a - r.c_m;
    CHECK(crit.sufficient_sympathetic == expect);
  }
}
