#pragma once

#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "uncstates/states.hpp"

namespace uncstates {

/// Annihilation operator of one mode on the tensor basis (mode 0 most significant).
inline CMatrix mode_lowering(int dim_per_mode, int modes, int mode) {
  const CMatrix a = build_rep(RepSpec::heisenberg(dim_per_mode)).ladder_minus.entries;
  CMatrix out = CMatrix::Identity(1, 1);
  for (int m = 0; m < modes; ++m) {
    const CMatrix f = m == mode ? a : CMatrix::Identity(dim_per_mode, dim_per_mode);
    CMatrix next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = out(i, j) * f;
    out = next;
  }
  return out;
}

inline void check_bogoliubov(const CMatrix& U, const CMatrix& V) {
  const Eigen::Index N = U.rows();
  require(U.cols() == N && V.rows() == N && V.cols() == N, ErrorKind::InvalidBogoliubov, "U, V must be N x N");
  const CMatrix g = U * U.adjoint() - V * V.adjoint() - CMatrix::Identity(N, N);
  require(g.cwiseAbs().maxCoeff() <= 1e-10, ErrorKind::InvalidBogoliubov, "U U^+ - V V^+ != 1");
  const CMatrix s = U * V.transpose();
  require((s - s.transpose()).cwiseAbs().maxCoeff() <= 1e-10, ErrorKind::InvalidBogoliubov, "U V^T not symmetric");
}

/// Multimode squeezed state: S|alpha>, where S a S^+ = U a + V a^+ and S = exp(G) with
/// G = (1/2) a^+ Z a^+ - (1/2) a Z* a + a^+ H a recovered from log [[U, V], [V*, U*]].
inline FockVector multimode_ss(const std::vector<Complex>& alphas, const CMatrix& U, const CMatrix& V,
                               int dim_per_mode, int work_margin = 4) {
  check_bogoliubov(U, V);
  const int N = static_cast<int>(U.rows());
  require(static_cast<int>(alphas.size()) == N, ErrorKind::DimensionMismatch, "one eigenvalue per mode");
  CMatrix T(2 * N, 2 * N);
  T << U, V, V.conjugate(), U.conjugate();
  const CMatrix Mlog = T.log();
  const CMatrix H = -Mlog.topLeftCorner(N, N), Z = -Mlog.topRightCorner(N, N);
  require((Z - Z.transpose()).cwiseAbs().maxCoeff() <= 1e-8 && (H + H.adjoint()).cwiseAbs().maxCoeff() <= 1e-8,
          ErrorKind::InvalidBogoliubov, "generator recovered from (U, V) is not of Bogoliubov form");

  const int work = dim_per_mode + work_margin;
  int total = 1;
  for (int m = 0; m < N; ++m) total *= work;
  require(total <= 4096, ErrorKind::TooLarge, "tensor space too large for dense exponentiation");
  std::vector<CMatrix> a(N), ad(N);
  for (int m = 0; m < N; ++m) {
    a[m] = mode_lowering(work, N, m);
    ad[m] = a[m].adjoint();
  }
  CMatrix G = CMatrix::Zero(total, total);
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      G += 0.5 * Z(m, n) * ad[m] * ad[n] - 0.5 * std::conj(Z(m, n)) * a[m] * a[n];
      G += H(m, n) * ad[m] * a[n];
    }
  CVector cs = CVector::Ones(1);
  for (int m = 0; m < N; ++m) {
    const CVector c = canonical_cs(alphas[m], work).coeffs();
    CVector next(cs.size() * c.size());
    for (Eigen::Index i = 0; i < cs.size(); ++i) next.segment(i * c.size(), c.size()) = cs[i] * c;
    cs = next;
  }
  const CVector psi = expm(G) * cs;

  // restrict to dim_per_mode levels in every mode
  int out_total = 1;
  for (int m = 0; m < N; ++m) out_total *= dim_per_mode;
  CVector out(out_total);
  for (int idx = 0; idx < out_total; ++idx) {
    int rest = idx, widx = 0, mul = 1;
    for (int m = N - 1; m >= 0; --m) {
      widx += (rest % dim_per_mode) * mul;
      rest /= dim_per_mode;
      mul *= work;
    }
    out[idx] = psi[widx];
  }
  FockVector s(RepSpec::heisenberg(dim_per_mode, N), out);
  require_physical(s);
  return s.normalized().phase_fixed();
}

}  // namespace uncstates

namespace uncstates {

/// Re-embeds a tensor-basis state into a larger per-mode truncation.
inline FockVector tensor_padded(const FockVector& s, int new_dim_per_mode) {
  const RepSpec& l = s.label();
  const int d = l.truncation, N = l.modes;
  require(new_dim_per_mode >= d, ErrorKind::DimensionMismatch, "cannot pad to a smaller truncation");
  int total = 1;
  for (int m = 0; m < N; ++m) total *= new_dim_per_mode;
  CVector out = CVector::Zero(total);
  for (int idx = 0; idx < s.dim(); ++idx) {
    int rest = idx, nidx = 0, mul = 1;
    for (int m = N - 1; m >= 0; --m) {
      nidx += (rest % d) * mul;
      rest /= d;
      mul *= new_dim_per_mode;
    }
    out[nidx] = s[idx];
  }
  return FockVector(RepSpec::heisenberg(new_dim_per_mode, N), out);
}

}  // namespace uncstates
