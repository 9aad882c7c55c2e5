#include "hybridcool/covariance.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hybridcool {
namespace covariance {

namespace {

using Quad = __float128;

Quad qabs(Quad x) { return x < 0 ? -x : x; }

// Dense LU solve with partial pivoting in extended precision. The Lyapunov
// systems here are at most 25x25 but can be conditioned like the square of
// the dynamics' spectral spread, which overwhelms double precision.
std::vector<Quad> lu_solve(std::vector<Quad> m, std::vector<Quad> b, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    Quad best = qabs(m[col * n + col]);
    for (int row = col + 1; row < n; ++row) {
      const Quad v = qabs(m[row * n + col]);
      if (v > best) {
        best = v;
        pivot = row;
      }
    }
    if (best == 0) throw std::runtime_error("singular Lyapunov system");
    if (pivot != col) {
      for (int k = 0; k < n; ++k) std::swap(m[col * n + k], m[pivot * n + k]);
      std::swap(b[col], b[pivot]);
    }
    const Quad inv = Quad(1) / m[col * n + col];
    for (int row = col + 1; row < n; ++row) {
      const Quad factor = m[row * n + col] * inv;
      if (factor == 0) continue;
      m[row * n + col] = 0;
      for (int k = col + 1; k < n; ++k) m[row * n + k] -= factor * m[col * n + k];
      b[row] -= factor * b[col];
    }
  }
  for (int row = n - 1; row >= 0; --row) {
    Quad acc = b[row];
    for (int k = row + 1; k < n; ++k) acc -= m[row * n + k] * b[k];
    b[row] = acc / m[row * n + row];
  }
  return b;
}

}  // namespace

bool is_hurwitz(const Eigen::MatrixXd& A) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(A);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("drift eigenvalue solve failed");
  }
  for (int i = 0; i < A.rows(); ++i) {
    if (solver.eigenvalues()(i).real() >= 0.0) return false;
  }
  return true;
}

LinearSystem build_system(const ReducedParams& r, bool require_stable) {
  r.validate();
  const bool stable = params::stability(r);
  if (require_stable && !stable) {
    throw std::invalid_argument("build_system requires stable parameters");
  }
  if (r.G > 0.0 && (r.c_m == 0.0 || r.eta == 0.0)) {
    throw std::invalid_argument("feedback without measurement channel");
  }

  const double gm = r.gamma_m / r.Omega;
  const double ga = r.gamma_a / r.Omega;
  const double gg = r.g() / r.Omega;
  const bool filtered = r.G > 0.0 && !r.fb_infinite();
  const int n = filtered ? 5 : 4;

  LinearSystem sys;
  sys.r = r;
  sys.has_filter = filtered;
  sys.A = Eigen::MatrixXd::Zero(n, n);
  sys.D = Eigen::MatrixXd::Zero(n, n);

  Eigen::MatrixXd& A = sys.A;
  Eigen::MatrixXd& D = sys.D;

  // Ensemble quadratures.
  A(0, 1) = 1.0;
  A(1, 0) = -1.0;
  A(1, 1) = -ga;
  A(1, 2) = 2.0 * gg;
  D(1, 1) = 2.0 * ga;

  // Mechanical quadratures: thermal plus measurement back-action drive.
  A(2, 3) = 1.0;
  A(3, 0) = 2.0 * gg;
  A(3, 2) = -1.0;
  A(3, 3) = -gm;
  D(3, 3) = 4.0 * gm * (r.n_bath + 0.5) + 4.0 * gm * r.c_m;

  if (filtered) {
    // Filter state h relaxes at W and is driven by the measured velocity;
    // substituting out the white-noise derivative leaves correlated white
    // noise on the momentum and filter rows.
    const double W = r.fb_bandwidth / r.Omega;
    const double s_meas = 1.0 / (4.0 * r.eta * r.c_m * gm);  // scaled imprecision PSD
    A(3, 4) = 1.0;
    A(4, 3) = -W * r.G * gm;
    A(4, 4) = -W;
    const double a_p = W * r.G * gm;
    const double a_h = -W * W * r.G * gm;
    D(3, 3) += a_p * a_p * s_meas;
    D(3, 4) += a_p * a_h * s_meas;
    D(4, 3) += a_p * a_h * s_meas;
    D(4, 4) += a_h * a_h * s_meas;
  } else if (r.G > 0.0) {
    // Unfiltered limit: direct velocity-proportional feedback. The white
    // imprecision noise feeds through instantaneously, so the smoothed
    // momentum variable sees it on both the position and momentum rows.
    const double s_meas = 1.0 / (4.0 * r.eta * r.c_m * gm);
    const double a = r.G * gm;             // position-row coefficient
    const double b = gm * (1.0 + r.G);     // total damping
    A(3, 3) = -b;
    D(2, 2) += a * a * s_meas;
    D(2, 3) += -a * a * b * s_meas;
    D(3, 2) += -a * a * b * s_meas;
    D(3, 3) += a * a * b * b * s_meas;
  }

  if (is_hurwitz(A) != stable) {
    throw std::logic_error("drift Hurwitz property disagrees with stability criterion");
  }
  return sys;
}

CovarianceResult stationary_covariance(const LinearSystem& sys) {
  const int n = static_cast<int>(sys.A.rows());
  const int nn = n * n;

  // vec(A S + S A^T) = (I (x) A + A (x) I) vec(S); solve M vec(S) = -vec(D).
  std::vector<Quad> M(static_cast<size_t>(nn) * nn, Quad(0));
  std::vector<Quad> rhs(nn, Quad(0));
  const auto idx = [n](int row, int col) { return col * n + row; };  // column-major vec
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // (I (x) A): block j acts on column j.
        M[static_cast<size_t>(idx(i, j)) * nn + idx(k, j)] += Quad(sys.A(i, k));
        // (A (x) I): couples columns, S A^T term.
        M[static_cast<size_t>(idx(i, j)) * nn + idx(i, k)] += Quad(sys.A(j, k));
      }
      rhs[idx(i, j)] = -Quad(sys.D(i, j));
    }
  }
  const std::vector<Quad> x = lu_solve(std::move(M), std::move(rhs), nn);

  // Residual in extended precision before anything is rounded back.
  std::vector<Quad> s(nn);
  for (int i = 0; i < nn; ++i) s[i] = x[i];
  Quad res2 = 0, dnorm2 = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Quad acc = Quad(sys.D(i, j));
      for (int k = 0; k < n; ++k) {
        acc += Quad(sys.A(i, k)) * s[idx(k, j)] + s[idx(i, k)] * Quad(sys.A(j, k));
      }
      res2 += acc * acc;
      const Quad d = Quad(sys.D(i, j));
      dnorm2 += d * d;
    }
  }

  CovarianceResult out;
  out.sigma = Eigen::MatrixXd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.sigma(i, j) = static_cast<double>(s[idx(i, j)]);
  out.sigma = 0.5 * (out.sigma + out.sigma.transpose()).eval();
  out.residual = std::sqrt(static_cast<double>(res2 / dnorm2));
  if (!(out.residual < 1e-10)) {
    throw std::runtime_error("Lyapunov residual exceeds 1e-10 of the diffusion norm");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.sigma);
  const double scale = std::abs(es.eigenvalues()(n - 1));
  if (es.eigenvalues()(0) < -1e-10 * scale) {
    throw std::runtime_error("stationary covariance is not positive semidefinite");
  }
  out.variance_zp = out.sigma(2, 2);
  return out;
}

double oracle_variance_zp(const ReducedParams& r) {
  return stationary_covariance(build_system(r)).variance_zp;
}

}  // namespace covariance
}  // namespace hybridcool
