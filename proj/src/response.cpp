#include "hybridcool/response.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hybridcool {
namespace response {

namespace {

constexpr Complex kI{0.0, 1.0};

// Convolution product of ascending-coefficient polynomials.
std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_acc(std::vector<Complex>& acc, const std::vector<Complex>& term) {
  if (term.size() > acc.size()) acc.resize(term.size(), Complex{0.0, 0.0});
  for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
}

}  // namespace

Complex chi_m(const ReducedParams& r, double omega, double mass_m) {
  const double z = omega / r.Omega;
  return 1.0 / (mass_m * r.Omega * r.Omega * zspace::dm(r, z));
}

Complex chi_a(const ReducedParams& r, double omega, double mass_a) {
  const double z = omega / r.Omega;
  return 1.0 / (mass_a * r.Omega * r.Omega * zspace::da(r, z));
}

Complex feedback_filter(const ReducedParams& r, double omega) {
  if (r.fb_infinite()) return {1.0, 0.0};
  return 1.0 / Complex{1.0, -omega / r.fb_bandwidth};
}

namespace zspace {

Complex p(const ReducedParams& r, double z) {
  const double gm = r.gamma_m / r.Omega;
  const double gg = r.g() / r.Omega;
  return dm(r, z) * da(r, z) * f(r, z) - kI * z * r.G * gm * da(r, z) -
         4.0 * gg * gg * f(r, z);
}

}  // namespace zspace

Complex chi_m_prime(const ReducedParams& r, double omega, double mass_m) {
  const double z = omega / r.Omega;
  return zspace::da(r, z) * zspace::f(r, z) /
         (mass_m * r.Omega * r.Omega * zspace::p(r, z));
}

std::pair<Complex, Complex> chi_normal_modes(const ReducedParams& r, double omega,
                                             double mass_m) {
  const double g = r.g();
  const double gamma_n = 0.5 * (r.gamma_a + r.gamma_m);
  const double mass_pm = 2.0 * mass_m * (1.0 - g * g / (r.Omega * r.Omega));
  const auto mode = [&](double sign) {
    const double omega_sq = r.Omega * r.Omega * (1.0 - sign * 2.0 * g / r.Omega);
    return 1.0 / (mass_pm * Complex{omega_sq - omega * omega, -omega * gamma_n});
  };
  return {mode(+1.0), mode(-1.0)};
}

Susceptibility make_susceptibility(ResponseKind kind, const ReducedParams& r,
                                   double mass_m, double mass_a) {
  r.validate();
  return Susceptibility{kind, r, mass_m, mass_a};
}

Complex Susceptibility::operator()(double omega) const {
  switch (kind) {
    case ResponseKind::kMechanical:
      return chi_m(r, omega, mass_m);
    case ResponseKind::kAtomic:
      return chi_a(r, omega, mass_a);
    case ResponseKind::kModified:
      return chi_m_prime(r, omega, mass_m);
    case ResponseKind::kNormalModePlus:
      return chi_normal_modes(r, omega, mass_m).first;
    case ResponseKind::kNormalModeMinus:
      return chi_normal_modes(r, omega, mass_m).second;
  }
  throw std::logic_error("unknown response kind");
}

std::vector<Complex> denominator_coeffs(const ReducedParams& r) {
  const double gm = r.gamma_m / r.Omega;
  const double ga = r.gamma_a / r.Omega;
  const double phi = zspace::phi(r);
  const double gg = r.g() / r.Omega;

  const std::vector<Complex> dm{{1.0, 0.0}, -kI * gm, {-1.0, 0.0}};
  const std::vector<Complex> da{{1.0, 0.0}, -kI * ga, {-1.0, 0.0}};
  std::vector<Complex> filt{{1.0, 0.0}};
  if (phi > 0.0) filt.push_back(-kI * phi);

  std::vector<Complex> coeffs = poly_mul(poly_mul(dm, da), filt);
  poly_acc(coeffs, poly_mul({{0.0, 0.0}, -kI * r.G * gm}, da));
  std::vector<Complex> spring = filt;
  for (auto& c : spring) c *= -4.0 * gg * gg;
  poly_acc(coeffs, spring);
  return coeffs;
}

std::vector<Complex> denominator_roots(const ReducedParams& r) {
  std::vector<Complex> c = denominator_coeffs(r);
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("characteristic-polynomial root solve failed");
  }
  std::vector<Complex> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

}  // namespace response
}  // namespace hybridcool
