#pragma once

#include <string>
#include <vector>

#include "uncstates/states.hpp"

namespace uncstates {

/// Parameters of the eigenvalue equation [u(X1 - iX2) + v(X1 + iX2) + w X3] psi = z psi.
struct OUSParams {
  Complex u{1.0, 0.0};
  Complex v{0.0, 0.0};
  Complex w{0.0, 0.0};
  Complex z{0.0, 0.0};
};

namespace detail {

// +1 if i[X1,X2] is positive definite on the interior, -1 if negative definite, 0 otherwise.
inline int commutator_sign(const OperatorMatrix& X1, const OperatorMatrix& X2) {
  const int m = std::min(X1.interior, X2.interior);
  if (m <= 0) return 0;
  const CMatrix c = (I * (X1.entries * X2.entries - X2.entries * X1.entries)).topLeftCorner(m, m);
  const CMatrix h = (c + c.adjoint()) / 2.0;
  const RVector ev = Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
  if (ev.minCoeff() > 0.0) return 1;
  if (ev.maxCoeff() < 0.0) return -1;
  return 0;
}

}  // namespace detail

/// Optimal uncertainty state: eigenvector of u(X1 - iX2) + v(X1 + iX2) (+ w X3).
/// Truncated reps use the forward recurrence on `dim` levels (operators may be larger);
/// exact reps (interior == full dimension) are solved densely and z must be an eigenvalue.
inline FockVector ladder_ous(const OperatorMatrix& X1, const OperatorMatrix& X2, const OUSParams& p, int dim,
                             const RepSpec& label, const OperatorMatrix* X3 = nullptr, int seed = 0) {
  require(X1.hermitian && X2.hermitian, ErrorKind::DimensionMismatch, "ladder_ous needs Hermitian operators");
  require(X1.dim() == X2.dim() && dim <= X1.dim(), ErrorKind::DimensionMismatch, "operator dimensions differ");
  CMatrix M = p.u * (X1.entries - I * X2.entries) + p.v * (X1.entries + I * X2.entries);
  if (X3 != nullptr) {
    require(X3->dim() == X1.dim(), ErrorKind::DimensionMismatch, "X3 dimension differs");
    M += p.w * X3->entries;
  }
  const bool exact = X1.interior >= X1.dim();

  if (exact) {
    require(dim == X1.dim(), ErrorKind::DimensionMismatch, "exact rep must be solved on its full space");
    Eigen::ComplexEigenSolver<CMatrix> es(M);
    Eigen::Index best = 0;
    (es.eigenvalues().array() - p.z).abs().minCoeff(&best);
    if (std::abs(es.eigenvalues()[best] - p.z) > 1e-8 * std::max(1.0, std::abs(p.z)))
      fail(ErrorKind::NoSolutionInTruncation, "z is not an eigenvalue of the finite-dimensional combination");
    return FockVector(label, es.eigenvectors().col(best)).normalized().phase_fixed();
  }

  const int sign = detail::commutator_sign(X1, X2);
  if (sign > 0) require(std::abs(p.u) > std::abs(p.v), ErrorKind::NonNormalizable, "needs |u| > |v|");
  if (sign < 0) require(std::abs(p.u) < std::abs(p.v), ErrorKind::NonNormalizable, "needs |u| < |v|");
  const int step = detail::band_step(M);
  require(step > 0, ErrorKind::NoSolutionInTruncation, "combination has no raising part");
  const RepSpec lab = label.with_truncation(dim);
  FockVector s = FockVector(lab, detail::banded_recurrence(M, p.z, dim, step, seed)).normalized();
  if (guard_tail_mass(s) > kTruncationGuard)
    fail(ErrorKind::NoSolutionInTruncation, "eigenvector does not decay within the truncation");
  return s.phase_fixed();
}

/// Convenience form on the hermitian components of a rep's lowering generator.
/// The operator set may be larger than dim (padding).
inline FockVector ladder_ous(const OperatorSet& ops, const OUSParams& p, int dim) {
  const int seed = (ops.spec.kind == Algebra::SU11OneMode && ops.spec.parity == Parity::Odd) ? 1 : 0;
  const bool w_term = p.w != 0.0;
  return ladder_ous(ops.hermitian_x1, ops.hermitian_x2, p, dim, ops.spec, w_term ? &ops.cartan : nullptr, seed);
}

/// g_0..g_nmax from u sqrt([n+1][2k+n]) g_{n+1} + v sqrt([n][2k+n-1]) g_{n-1} = z g_n, g_0 = 1.
inline std::vector<Complex> suq11_ous_coeffs(Complex z, Complex u, Complex v, double q, double k, int n_max) {
  require(u != 0.0, ErrorKind::NonNormalizable, "u must be nonzero");
  require(std::abs(v) < std::abs(u), ErrorKind::NonNormalizable, "normalization needs |v| < |u|");
  std::vector<Complex> g(n_max + 1, 0.0);
  g[0] = 1.0;
  for (int n = 0; n < n_max; ++n) {
    Complex rhs = z * g[n];
    if (n > 0) rhs -= v * std::sqrt(q_bracket(n, q) * q_bracket(2 * k + n - 1, q)) * g[n - 1];
    g[n + 1] = rhs / (u * std::sqrt(q_bracket(n + 1, q) * q_bracket(2 * k + n, q)));
  }
  return g;
}

/// z = 0 closed form: g_{2n} = (-v/u)^n sqrt([2n-1]!! ((2k))_{2n} / ([2n]!! ((2k+1))_{2n})), odd terms zero.
inline std::vector<Complex> suq11_ous_coeffs_z0(Complex u, Complex v, double q, double k, int n_max) {
  std::vector<Complex> g(n_max + 1, 0.0);
  for (int m = 0; 2 * m <= n_max; ++m) {
    const double r = q_double_factorial(2 * m - 1, q) * q_shifted_product(2 * k, 2 * m, q) /
                     (q_double_factorial(2 * m, q) * q_shifted_product(2 * k + 1, 2 * m, q));
    g[2 * m] = std::pow(-v / u, m) * std::sqrt(r);
  }
  return g;
}

/// q = 1 closed form: g_n = (-l/2u)^n sqrt((2k)_n/n!) 2F1(k + z/l, -n; 2k; 2), l = 2 sqrt(-uv).
inline std::vector<Complex> su11_ous_coeffs_hypergeometric(Complex z, Complex u, Complex v, double k, int n_max) {
  std::vector<Complex> g(n_max + 1, 0.0);
  if (v == 0.0) {
    g[0] = 1.0;
    for (int n = 0; n < n_max; ++n) g[n + 1] = g[n] * z / (u * std::sqrt((n + 1.0) * (2 * k + n)));
    return g;
  }
  const Complex l = 2.0 * csqrt(-u * v);
  double ratio = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) ratio *= (2 * k + n - 1) / n;
    g[n] = std::pow(-l / (2.0 * u), n) * std::sqrt(ratio) *
           hyp_series(HypKind::TwoF1, k + z / l, Complex(-n), 2 * k, 2.0);
  }
  return g;
}

/// Normalized su_q(1,1) optimal uncertainty state on dim levels.
inline FockVector suq11_ous(Complex z, Complex u, Complex v, double q, double k, int dim) {
  const std::vector<Complex> g = suq11_ous_coeffs(z, u, v, q, k, dim - 1);
  CVector c(dim);
  for (int n = 0; n < dim; ++n) c[n] = g[n];
  FockVector s = FockVector(RepSpec::suq11(k, q, dim), c).normalized();
  require_physical(s);
  return s.phase_fixed();
}

/// Analytic (Barut-Girardello) solution of (u1 K- + v1 K+) Phi = z1 Phi and its branch record.
struct AnalyticOus {
  FockVector state;
  Complex s;          // principal sqrt(-v1/u1)
  Complex a;          // 1F1 numerator parameter k + z1/(2 u1 s)
  std::string branch; // "principal"
  int cs_branch = 0;  // +1: a = 0 (xi = -s); -1: a = 2k (xi = +s); 0: not a CS
  Complex xi{0.0, 0.0};
};

/// Phi(eta) = e^{-s eta} 1F1(a; 2k; 2 s eta) expanded by Taylor convolution (100-digit),
/// Fock amplitudes c_n = phi_n sqrt(n! (2k)_n).
inline AnalyticOus su11_analytic_ous(Complex z1, Complex u1, Complex v1, double k, int dim) {
  require(std::abs(u1) > std::abs(v1), ErrorKind::NonNormalizable, "analytic solution needs |u1| > |v1|");
  const RepSpec spec = RepSpec::su11(k, dim);
  spec.validate();
  AnalyticOus out;
  out.branch = "principal";
  if (v1 == 0.0) {
    out.state = bg_cs(z1 / u1, k, dim).phase_fixed();
    out.s = 0.0;
    out.a = 0.0;
    return out;
  }
  out.s = csqrt(-v1 / u1);
  out.a = k + z1 / (2.0 * u1 * out.s);
  const double tol = 1e-9;
  if (std::abs(z1 + 2.0 * k * u1 * out.s) <= tol) {
    out.cs_branch = 1;
    out.xi = -out.s;
  } else if (std::abs(z1 - 2.0 * k * u1 * out.s) <= tol) {
    out.cs_branch = -1;
    out.xi = out.s;
  }

  const WideComplex s = widen(out.s), a = widen(out.a);
  const WideReal twok(2 * k);
  std::vector<WideComplex> e(dim), f(dim);
  e[0] = WideComplex(1);
  f[0] = WideComplex(1);
  for (int m = 0; m + 1 < dim; ++m) {
    const WideReal m1(m + 1);
    e[m + 1] = e[m] * (-s) / m1;
    f[m + 1] = f[m] * (a + WideComplex(WideReal(m))) / (twok + WideReal(m)) / m1 * WideReal(2) * s;
  }
  CVector c(dim);
  WideReal scale(1);  // sqrt(n! (2k)_n), built incrementally
  for (int n = 0; n < dim; ++n) {
    if (n > 0) scale *= boost::multiprecision::sqrt(WideReal(n) * (twok + WideReal(n - 1)));
    WideComplex phi(0);
    for (int m = 0; m <= n; ++m) phi += f[m] * e[n - m];
    c[n] = narrow(phi * scale);
  }
  FockVector st = FockVector(spec, c).normalized();
  require_physical(st);
  out.state = st.phase_fixed();
  return out;
}

/// Second normalizable solution for k < 1/2: eta^{1-2k} F(eta) lives in D+(1-k).
inline AnalyticOus su11_analytic_ous_second(Complex z1, Complex u1, Complex v1, double k, int dim) {
  require(k < 0.5, ErrorKind::InvalidRepParameter, "second solution exists for k < 1/2 only");
  return su11_analytic_ous(z1, u1, v1, 1.0 - k, dim);
}

}  // namespace uncstates
