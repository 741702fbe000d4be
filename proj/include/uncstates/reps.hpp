#pragma once

#include <cmath>
#include <optional>

#include "uncstates/fock.hpp"
#include "uncstates/special.hpp"

namespace uncstates {

struct OperatorSet {
  RepSpec spec;
  OperatorMatrix ladder_minus;
  OperatorMatrix ladder_plus;
  OperatorMatrix cartan;
  OperatorMatrix hermitian_x1;
  OperatorMatrix hermitian_x2;
  std::optional<OperatorMatrix> position;
  std::optional<OperatorMatrix> momentum;
};

/// X1 = (A + A^+)/2, X2 = i(A - A^+)/2, so A = X1 - i X2.
inline std::pair<OperatorMatrix, OperatorMatrix> hermitian_components(const OperatorMatrix& A) {
  require(A.entries.rows() == A.entries.cols(), ErrorKind::DimensionMismatch, "ladder operator not square");
  const CMatrix Ad = A.entries.adjoint();
  return {OperatorMatrix((A.entries + Ad) / 2.0, true, A.interior, "X1"),
          OperatorMatrix(I * (A.entries - Ad) / 2.0, true, A.interior, "X2")};
}

namespace detail {

template <typename F>
CMatrix lowering_from(int d, F amp) {
  CMatrix m = CMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) m(n - 1, n) = amp(n);
  return m;
}

inline CMatrix diag_from(const RVector& v) { return v.cast<Complex>().asDiagonal(); }

}  // namespace detail

/// Truncated matrix realization of the generators of a representation.
inline OperatorSet build_rep(const RepSpec& spec) {
  spec.validate();
  require(spec.modes == 1, ErrorKind::InvalidRepParameter, "build_rep handles single-mode reps");
  const int d = spec.dim();
  const int interior = spec.finite() ? d : d - 2;
  const double k = spec.k, j = spec.j, q = spec.q;
  CMatrix lower;
  RVector cart(d);

  switch (spec.kind) {
    case Algebra::Heisenberg:
      lower = detail::lowering_from(d, [](int n) { return std::sqrt(double(n)); });
      for (int n = 0; n < d; ++n) cart[n] = n;
      break;
    case Algebra::SU11Discrete:
      lower = detail::lowering_from(d, [k](int n) { return std::sqrt(n * (2.0 * k + n - 1.0)); });
      for (int n = 0; n < d; ++n) cart[n] = k + n;
      break;
    case Algebra::SU11OneMode: {
      const CMatrix a = detail::lowering_from(d, [](int n) { return std::sqrt(double(n)); });
      lower = a * a / 2.0;
      for (int n = 0; n < d; ++n) cart[n] = n / 2.0 + 0.25;
      break;
    }
    case Algebra::SU2:
      lower = detail::lowering_from(d, [j](int n) { return std::sqrt(n * (2.0 * j - n + 1.0)); });
      for (int n = 0; n < d; ++n) cart[n] = n - j;
      break;
    case Algebra::QBoson:
      lower = detail::lowering_from(d, [q](int n) { return std::sqrt(q_bracket(n, q)); });
      for (int n = 0; n < d; ++n) cart[n] = n;
      break;
    case Algebra::SUq11:
      lower = detail::lowering_from(
          d, [k, q](int n) { return std::sqrt(q_bracket(n, q) * q_bracket(2.0 * k + n - 1.0, q)); });
      for (int n = 0; n < d; ++n) cart[n] = k + n;
      break;
    case Algebra::SUq2:
      lower = detail::lowering_from(
          d, [j, q](int n) { return std::sqrt(q_bracket(n, q) * q_bracket(2.0 * j - n + 1.0, q)); });
      for (int n = 0; n < d; ++n) cart[n] = n - j;
      break;
  }

  OperatorSet set;
  set.spec = spec;
  set.ladder_minus = OperatorMatrix(lower, false, interior, "lower");
  set.ladder_plus = OperatorMatrix(lower.adjoint(), false, interior, "raise");
  set.cartan = OperatorMatrix(detail::diag_from(cart), true, interior, "cartan");
  auto [x1, x2] = hermitian_components(set.ladder_minus);
  set.hermitian_x1 = x1;
  set.hermitian_x2 = x2;
  if (spec.kind == Algebra::Heisenberg) {
    const CMatrix Ad = lower.adjoint();
    set.position = OperatorMatrix((lower + Ad) / std::sqrt(2.0), true, interior, "q");
    set.momentum = OperatorMatrix(I * (Ad - lower) / std::sqrt(2.0), true, interior, "p");
  }
  return set;
}

/// Sup norm of [A,B] - expected on the common valid interior.
inline double commutator_residual(const OperatorMatrix& A, const OperatorMatrix& B, const OperatorMatrix& expected) {
  require(A.dim() == B.dim() && A.dim() == expected.dim(), ErrorKind::DimensionMismatch,
          "commutator operands differ in dimension");
  const int m = std::min({A.interior, B.interior, expected.interior});
  const CMatrix c = A.entries * B.entries - B.entries * A.entries - expected.entries;
  if (m <= 0) return 0.0;
  return c.topLeftCorner(m, m).cwiseAbs().maxCoeff();
}

struct PrimedOps {
  OperatorMatrix k3;
  OperatorMatrix kplus;
  OperatorMatrix kminus;
};

/// Primed su(1,1) generators attached to the combination uK- + vK+.
/// K'3 = i(uK- + vK+)/(2 sqrt(uv)), K'+- = iK3 -+ (sqrt(u/v)K- - sqrt(v/u)K+)/2.
inline PrimedOps primed_su11_ops(Complex u, Complex v, const OperatorSet& base) {
  require(u != 0.0 && v != 0.0, ErrorKind::ZeroParameter, "primed operators need u v != 0");
  const CMatrix& km = base.ladder_minus.entries;
  const CMatrix& kp = base.ladder_plus.entries;
  const CMatrix& k3 = base.cartan.entries;
  const int interior = base.ladder_minus.interior;
  const Complex ruv = csqrt(u / v), rvu = 1.0 / ruv, suv = v * ruv;
  const CMatrix shift = (ruv * km - rvu * kp) / 2.0;
  return {OperatorMatrix(I * (u * km + v * kp) / (2.0 * suv), false, interior, "K3'"),
          OperatorMatrix(I * k3 - shift, false, interior, "K+'"),
          OperatorMatrix(I * k3 + shift, false, interior, "K-'")};
}

/// Elementwise q-bracket [c * diag]_q of a diagonal operator.
inline OperatorMatrix q_bracket_of_diagonal(const OperatorMatrix& diag, double c, double q) {
  CMatrix m = CMatrix::Zero(diag.dim(), diag.dim());
  for (int n = 0; n < diag.dim(); ++n) m(n, n) = q_bracket(c * diag.entries(n, n).real(), q);
  return OperatorMatrix(m, true, diag.interior, "qbracket");
}

}  // namespace uncstates
