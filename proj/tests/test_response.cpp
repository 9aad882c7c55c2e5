#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include <hybridcool/constants.hpp>
#include <hybridcool/response.hpp>

using namespace hybridcool;
using params::ReducedParams;
using response::Complex;

namespace {

ReducedParams coupled_pair() {
  ReducedParams r;
  r.Omega = kTwoPi * 220e3;
  r.gamma_m = 1e-6 * r.Omega;
  r.gamma_a = 1e-4 * r.Omega;
  r.n_bath = 1e4;
  r.c_m = 100.0;
  r.c_a = 500.0;  // g = 4.5e-3 Omega: resolved splitting, well hybridized
  return r;
}

double max_imag(const std::vector<Complex>& roots) {
  double m = -1e300;
  for (const Complex& z : roots) m = std::max(m, z.imag());
  return m;
}

}  // namespace

TEST_SUITE("response") {
  TEST_CASE("bare mechanical response has static value 1/(M Omega^2)") {
    const ReducedParams r = coupled_pair();
    const double M = 2.3e-12;
    const Complex chi0 = response::chi_m(r, 0.0, M);
    CHECK(chi0.real() == doctest::Approx(1.0 / (M * r.Omega * r.Omega)).epsilon(1e-14));
    CHECK(chi0.imag() == 0.0);
  }

  TEST_CASE("on resonance the bare response is damping-limited") {
    const ReducedParams r = coupled_pair();
    const Complex chi = response::chi_m(r, r.Omega, 1.0);
    // 1/(-i M Omega gamma_m) = +i/(M Omega gamma_m)
    CHECK(chi.real() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(chi.imag() == doctest::Approx(1.0 / (r.Omega * r.gamma_m)).epsilon(1e-12));
  }

  TEST_CASE("feedback filter is flat at infinite bandwidth and -3 dB at the corner") {
    ReducedParams r = coupled_pair();
    CHECK(response::feedback_filter(r, 0.77 * r.Omega) == Complex{1.0, 0.0});

    r.fb_bandwidth = 5.0 * r.Omega;
    const Complex f = response::feedback_filter(r, r.fb_bandwidth);
    CHECK(std::abs(f) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(response::feedback_filter(r, 0.0) == Complex{1.0, 0.0});
  }

  TEST_CASE("closed loop without ensemble or gain reduces to the bare response") {
    ReducedParams r = coupled_pair();
    r.c_a = 0.0;
    r.G = 0.0;
    for (double w : {0.0, 0.3 * r.Omega, r.Omega, 2.7 * r.Omega}) {
      const Complex bare = response::chi_m(r, w);
      const Complex closed = response::chi_m_prime(r, w);
      CHECK(std::abs(closed - bare) <= 1e-12 * std::abs(bare));
    }
  }

  TEST_CASE("gain broadens the closed-loop resonance like extra damping") {
    ReducedParams r = coupled_pair();
    r.c_a = 0.0;
    r.G = 50.0;
    // With flat feedback the loop term is -i w G M gamma_m, i.e. the
    // mechanical linewidth gamma_m (1 + G).
    const Complex closed = response::chi_m_prime(r, r.Omega);
    const double broadened = 1.0 / (r.Omega * r.gamma_m * (1.0 + r.G));
    CHECK(std::abs(closed) == doctest::Approx(broadened).epsilon(1e-10));
  }

  TEST_CASE("hybridized modes split by the coupling rate") {
    const ReducedParams r = coupled_pair();
    const double gz = r.g() / r.Omega;
    REQUIRE(gz > 10.0 * r.gamma_a / r.Omega);  // resolved-splitting regime
    const auto roots = response::denominator_roots(r);
    REQUIRE(roots.size() == 4);
    // Positive-frequency pair sits at sqrt(1 -+ 2 g/Omega) in z units.
    std::vector<double> pos;
    for (const Complex& z : roots) {
      if (z.real() > 0.0) pos.push_back(z.real());
    }
    REQUIRE(pos.size() == 2);
    std::sort(pos.begin(), pos.end());
    CHECK(pos[0] == doctest::Approx(std::sqrt(1.0 - 2.0 * gz)).epsilon(1e-4));
    CHECK(pos[1] == doctest::Approx(std::sqrt(1.0 + 2.0 * gz)).epsilon(1e-4));
    // Small-coupling splitting is 2g in angular units.
    CHECK(pos[1] - pos[0] == doctest::Approx(2.0 * gz).epsilon(0.05));
  }

  TEST_CASE("characteristic roots cross the real axis exactly at the instability") {
    ReducedParams r = coupled_pair();
    r.gamma_m = 1e-6 * r.Omega;
    r.gamma_a = 1e-4 * r.Omega;
    // Damped system: all roots in the lower half plane (decaying in time).
    auto set_g = [&r](double g_over_omega) {
      // keep c_m fixed, move c_a to reach the requested coupling
      const double c = 4.0 * g_over_omega * g_over_omega * r.Omega * r.Omega /
                       (r.gamma_a * r.gamma_m);
      r.c_a = c / (16.0 * r.c_m);
    };
    set_g(0.499);
    CHECK(params::stability(r));
    CHECK(max_imag(response::denominator_roots(r)) < 0.0);
    set_g(0.501);
    CHECK_FALSE(params::stability(r));
    CHECK(max_imag(response::denominator_roots(r)) > 0.0);
  }

  TEST_CASE("polynomial coefficients evaluate to the z-space denominator") {
    ReducedParams r = coupled_pair();
    r.G = 17.0;
    r.fb_bandwidth = 100.0 * r.Omega;  // finite filter: degree 5
    const auto coeffs = response::denominator_coeffs(r);
    CHECK(coeffs.size() == 6);
    for (double z : {-2.2, -0.9, 0.1, 0.9999, 1.3}) {
      Complex acc{0.0, 0.0};
      for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
      const Complex direct = response::zspace::p(r, z);
      CHECK(std::abs(acc - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }

  TEST_CASE("denominator roots annihilate the polynomial") {
    ReducedParams r = coupled_pair();
    r.G = 3.0;
    const auto coeffs = response::denominator_coeffs(r);
    double scale = 0.0;
    for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
    for (const Complex& root : response::denominator_roots(r)) {
      Complex acc{0.0, 0.0};
      for (size_t k = coeffs.size(); k-- > 0;) acc = acc * root + coeffs[k];
      CHECK(std::abs(acc) <= 1e-10 * scale);
    }
  }

  TEST_CASE("factored 1 - z^2 keeps the resonance profile near z = 1") {
    // At z = 1 + e with e ~ 1e-8 the direct difference 1 - z*z wobbles at
    // the 1e-16/e level; the factored form tracks -2e - e^2 to rounding.
    for (double e : {1e-7, -1e-7, 3e-9, -3e-9}) {
      const double z = 1.0 + e;
      const double expect = -2.0 * e - e * e;
      CHECK(response::zspace::one_minus_sq(z) == doctest::Approx(expect).epsilon(1e-14));
    }
  }

  TEST_CASE("normal-mode approximants reproduce the closed response near resonance") {
    ReducedParams r = coupled_pair();
    r.G = 0.0;
    const double gz = r.g() / r.Omega;
    for (double z : {std::sqrt(1.0 - 2.0 * gz), std::sqrt(1.0 + 2.0 * gz)}) {
      const double w = z * r.Omega;
      const auto [plus, minus] = response::chi_normal_modes(r, w);
      const Complex sum = plus + minus;
      const Complex exact = response::chi_m_prime(r, w);
      CHECK(std::abs(sum - exact) <= 0.05 * std::abs(exact));
    }
  }

  TEST_CASE("susceptibility dispatch matches the direct functions") {
    ReducedParams r = coupled_pair();
    r.G = 2.0;
    const double w = 0.83 * r.Omega;
    CHECK(response::make_susceptibility(response::ResponseKind::kMechanical, r)(w) ==
          response::chi_m(r, w));
    CHECK(response::make_susceptibility(response::ResponseKind::kAtomic, r)(w) ==
          response::chi_a(r, w));
    CHECK(response::make_susceptibility(response::ResponseKind::kModified, r)(w) ==
          response::chi_m_prime(r, w));
  }
}
