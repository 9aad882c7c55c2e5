#ifndef HYBRIDCOOL_COVARIANCE_HPP_
#define HYBRIDCOOL_COVARIANCE_HPP_

#include <Eigen/Dense>

#include "hybridcool/params.hpp"

namespace hybridcool {
namespace covariance {

using params::ReducedParams;

// Linear stochastic model in scaled units: positions in x_zp, momenta in
// p_zp = sqrt(hbar M Omega / 2) per oscillator, time in 1/Omega. State layout
// is (x_a, p_a, x_m, p_m) plus, when the feedback filter is dynamical, a
// trailing filter state.
struct LinearSystem {
  Eigen::MatrixXd A;  // drift
  Eigen::MatrixXd D;  // diffusion, <xi(t) xi(t')^T> = D delta(t - t')
  bool has_filter = false;
  ReducedParams r;
};

// Assembles drift and diffusion for the coupled pair with derivative feedback.
// With a finite filter bandwidth and G > 0 the filter is a fifth state; the
// flagged infinite-bandwidth mode uses direct velocity-proportional feedback
// whose measurement noise enters both quadrature rows as correlated white
// noise. Throws std::invalid_argument on unstable parameters unless
// require_stable is false (boundary scans); throws std::logic_error if the
// drift's Hurwitz property ever disagrees with the stability criterion.
LinearSystem build_system(const ReducedParams& r, bool require_stable = true);

bool is_hurwitz(const Eigen::MatrixXd& A);

struct CovarianceResult {
  Eigen::MatrixXd sigma;   // stationary covariance, scaled units
  double residual = 0.0;   // ||A S + S A^T + D||_F / ||D||_F
  double variance_zp = 0.0;  // sigma(x_m, x_m) = <x_m^2>/x_zp^2
};

// Solves A S + S A^T + D = 0 by vectorization in extended precision.
// Throws std::runtime_error if the residual exceeds 1e-10 ||D|| or if S is
// not positive semidefinite.
CovarianceResult stationary_covariance(const LinearSystem& sys);

// Convenience: build + solve, returning <x_m^2>/x_zp^2.
double oracle_variance_zp(const ReducedParams& r);

}  // namespace covariance
}  // namespace hybridcool

#endif  // HYBRIDCOOL_COVARIANCE_HPP_
