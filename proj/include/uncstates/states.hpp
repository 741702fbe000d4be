#pragma once

#include <cmath>
#include <vector>

#include "uncstates/expm.hpp"
#include "uncstates/reps.hpp"

namespace uncstates {

namespace detail {

// c_0 = 1, c_{n+1} = c_n * ratio(n), then normalized and guarded.
template <typename F>
FockVector ratio_series(const RepSpec& label, int dim, F ratio) {
  CVector c(dim);
  c[0] = 1.0;
  for (int n = 0; n + 1 < dim; ++n) c[n + 1] = c[n] * ratio(n);
  FockVector s = FockVector(label, c).normalized();
  require_physical(s);
  return s;
}

}  // namespace detail

inline FockVector canonical_cs(Complex alpha, int dim) {
  return detail::ratio_series(RepSpec::heisenberg(dim), dim,
                              [alpha](int n) { return alpha / std::sqrt(double(n + 1)); });
}

/// Squeeze frame (u, v) with |u|^2 - |v|^2 = 1 and Stoler parameter zeta.
struct SqueezeFrame {
  Complex u{1.0, 0.0};
  Complex v{0.0, 0.0};

  SqueezeFrame() = default;
  SqueezeFrame(Complex uu, Complex vv) : u(uu), v(vv) {
    require(std::abs(std::norm(u) - std::norm(v) - 1.0) <= 1e-12, ErrorKind::NonNormalizable,
            "squeeze frame needs |u|^2 - |v|^2 = 1");
  }

  static SqueezeFrame from_r(double r, double theta = 0.0) {
    return SqueezeFrame(std::cosh(r), std::polar(std::sinh(r), theta));
  }

  /// |zeta| = arcosh|u|, arg zeta = arg v - arg u.
  Complex zeta() const {
    const double r = std::acosh(std::max(1.0, std::abs(u)));
    return std::polar(r, std::arg(v) - std::arg(u));
  }
};

namespace detail {

// Forward recurrence for a banded (offsets -s, 0, +s) matrix M: row n of (M - z)g = 0
// is solved for g_{n+s}. Rescales when magnitudes drift.
inline CVector banded_recurrence(const CMatrix& M, Complex z, int dim, int step, int seed) {
  CVector g = CVector::Zero(dim);
  g[seed] = 1.0;
  for (int n = seed; n + step < dim; n += step) {
    const Complex up = M(n, n + step);
    require(std::abs(up) > 0.0, ErrorKind::NoSolutionInTruncation, "vanishing raising coefficient in recurrence");
    Complex rhs = (z - M(n, n)) * g[n];
    if (n - step >= 0) rhs -= M(n, n - step) * g[n - step];
    g[n + step] = rhs / up;
    const double mag = std::abs(g[n + step]);
    if (mag > 1e150) g /= mag;
  }
  return g;
}

inline int band_step(const CMatrix& M) {
  const Eigen::Index d = M.rows();
  for (Eigen::Index t = 1; t < d; ++t)
    for (Eigen::Index n = 0; n + t < d; ++n)
      if (M(n, n + t) != 0.0) return static_cast<int>(t);
  return 0;
}

}  // namespace detail

/// Eigenvector of (u a + v a^+) with eigenvalue alpha, by recurrence.
inline FockVector displaced_squeezed(Complex alpha, const SqueezeFrame& frame, int dim) {
  require(std::abs(frame.u) > std::abs(frame.v), ErrorKind::NonNormalizable, "squeezed state needs |u| > |v|");
  const OperatorSet ops = build_rep(RepSpec::heisenberg(dim + 2));
  const CMatrix M = frame.u * ops.ladder_minus.entries + frame.v * ops.ladder_plus.entries;
  FockVector s = FockVector(RepSpec::heisenberg(dim), detail::banded_recurrence(M, alpha, dim, 1, 0)).normalized();
  require_physical(s);
  return s.phase_fixed();
}

/// Stoler form e^{i arg u} S(-zeta)|alpha e^{-i arg u}>, S(x) = exp(x K+ - x* K-), K+ = a^+^2/2.
/// Evaluated on dim + 64 levels, then truncated.
inline FockVector displaced_squeezed_stoler(Complex alpha, const SqueezeFrame& frame, int dim) {
  require(std::abs(frame.u) > std::abs(frame.v), ErrorKind::NonNormalizable, "squeezed state needs |u| > |v|");
  const int work = dim + 64;
  const OperatorSet ops = build_rep(RepSpec::heisenberg(work));
  const CMatrix& a = ops.ladder_minus.entries;
  const CMatrix& ad = ops.ladder_plus.entries;
  const Complex x = -frame.zeta();
  const CMatrix G = x * (ad * ad) / 2.0 - std::conj(x) * (a * a) / 2.0;
  const Complex phase = std::polar(1.0, std::arg(frame.u));
  const FockVector cs = canonical_cs(alpha / phase, work);
  const CVector psi = phase * (expm(G) * cs.coeffs());
  FockVector s = FockVector(RepSpec::heisenberg(work), psi).truncated(dim);
  require_physical(s);
  return s.normalized().phase_fixed();
}

/// Position-space wavefunction from the Hermite-function expansion.
inline std::vector<Complex> coordinate_wavefunction(const FockVector& s, const std::vector<double>& grid) {
  require(s.label().kind == Algebra::Heisenberg && s.label().modes == 1, ErrorKind::DimensionMismatch,
          "coordinate representation needs a single oscillator mode");
  require_physical(s);
  std::vector<Complex> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    double prev = 0.0, cur = std::pow(M_PI, -0.25) * std::exp(-x * x / 2.0);
    Complex acc = s[0] * cur;
    for (int n = 0; n + 1 < s.dim(); ++n) {
      const double next = std::sqrt(2.0 / (n + 1)) * x * cur - std::sqrt(double(n) / (n + 1)) * prev;
      prev = cur;
      cur = next;
      acc += s[n + 1] * cur;
    }
    out[i] = acc;
  }
  return out;
}

/// Closed-form Gaussian eigenfunction of u a + v a^+ (normalization fixed analytically, phase free).
inline std::vector<Complex> squeezed_wavefunction(Complex alpha, Complex u, Complex v, const std::vector<double>& grid) {
  const Complex A = (u + v) / (2.0 * (u - v));
  const Complex q0 = std::sqrt(2.0) * alpha / (u + v);
  const double ar = A.real();
  const Complex Aq0 = A * q0;
  const double B = (A * q0 * q0).real() - Aq0.real() * Aq0.real() / ar;
  const Complex pref = std::pow(M_PI, -0.25) / csqrt(u - v);
  std::vector<Complex> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    out[i] = pref * std::exp(-A * (x - q0) * (x - q0) + B);
  }
  return out;
}

/// Spin CS (1+|tau|^2)^{-j} exp(tau J+)|j,-j>.
inline FockVector spin_cs(Complex tau, double j) {
  const OperatorSet ops = build_rep(RepSpec::su2(j));
  const int d = ops.spec.dim();
  CVector low = CVector::Zero(d);
  low[0] = 1.0;
  CVector c = expm_nilpotent(tau * ops.ladder_plus.entries) * low;
  c *= std::pow(1.0 + std::norm(tau), -j);
  return FockVector(ops.spec, c);
}

/// Spin CS labelled by angles, tau = e^{-i phi} tan(theta/2).
inline FockVector spin_cs_angles(double theta, double phi, double j) {
  return spin_cs(std::polar(std::tan(theta / 2.0), -phi), j);
}

/// Perelomov SU(1,1) CS, amplitudes (1-|xi|^2)^k sqrt((2k)_n/n!) xi^n.
inline FockVector su11_cs(Complex xi, double k, int dim) {
  require(std::abs(xi) < 1.0, ErrorKind::OutOfDisk, "Perelomov CS needs |xi| < 1");
  const RepSpec spec = RepSpec::su11(k, dim);
  spec.validate();
  CVector c(dim);
  c[0] = std::pow(1.0 - std::norm(xi), k);
  for (int n = 0; n + 1 < dim; ++n) c[n + 1] = c[n] * xi * std::sqrt((2.0 * k + n) / (n + 1.0));
  FockVector s(spec, c);
  require_physical(s);
  return s.normalized();
}

/// Barut-Girardello CS, amplitudes proportional to z^n / sqrt(n! Gamma(2k+n)).
inline FockVector bg_cs(Complex z, double k, int dim) {
  const RepSpec spec = RepSpec::su11(k, dim);
  spec.validate();
  return detail::ratio_series(spec, dim, [z, k](int n) { return z / std::sqrt((n + 1.0) * (2.0 * k + n)); });
}

/// q-deformed CS, amplitudes proportional to alpha^n / sqrt([n]_q!).
inline FockVector q_cs(Complex alpha, double q, int dim) {
  const RepSpec spec = RepSpec::qboson(q, dim);
  spec.validate();
  return detail::ratio_series(spec, dim, [alpha, q](int n) { return alpha / std::sqrt(q_bracket(n + 1, q)); });
}

/// Deviation of the quadrature form of the SU(2) resolution of unity from the identity.
inline double su2_resolution_check(double j, int order) {
  const RepSpec spec = RepSpec::su2(j);
  spec.validate();
  const int d = spec.dim();
  const QuadratureRule gl = gauss_legendre(order);
  const int nphi = std::max(order, 2 * d);
  CMatrix sum = CMatrix::Zero(d, d);
  for (int i = 0; i < order; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    for (int m = 0; m < nphi; ++m) {
      const double phi = 2.0 * M_PI * m / nphi;
      const CVector c = spin_cs_angles(theta, phi, j).coeffs();
      sum += (gl.weights[i] * 2.0 * M_PI / nphi) * (c * c.adjoint());
    }
  }
  sum *= d / (4.0 * M_PI);
  return (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

}  // namespace uncstates
