#pragma once

#include <vector>

#include "uncstates/fock.hpp"

namespace uncstates {

/// Means, uncertainty matrix sigma and mean-commutator matrix C = -(i/2)<[X_k, X_j]>.
struct MomentSet {
  RVector means;
  RMatrix sigma;
  RMatrix cmat;
  int n() const { return static_cast<int>(means.size()); }
};

namespace detail {

inline int common_dim(const std::vector<OperatorMatrix>& ops) {
  require(!ops.empty(), ErrorKind::EmptyInput, "empty operator tuple");
  for (const auto& op : ops) {
    require(op.dim() == ops[0].dim(), ErrorKind::DimensionMismatch, "operators differ in dimension");
    require(op.hermitian, ErrorKind::ImaginaryExpectation, "moments need Hermitian observables");
  }
  return ops[0].dim();
}

// Gram matrix S_kj = sum_i p_i <(X_k - m_k) psi_i | (X_j - m_j) psi_i>.
inline MomentSet from_gram(const std::vector<OperatorMatrix>& ops, const std::vector<CVector>& vecs,
                           const std::vector<double>& weights) {
  const int n = static_cast<int>(ops.size());
  RVector means = RVector::Zero(n);
  for (int k = 0; k < n; ++k) {
    Complex m = 0.0;
    for (size_t i = 0; i < vecs.size(); ++i) m += weights[i] * vecs[i].dot(ops[k].entries * vecs[i]);
    if (std::abs(m.imag()) > 1e-10 * std::max(1.0, std::abs(m.real())))
      fail(ErrorKind::ImaginaryExpectation, "Hermitian observable has complex mean");
    means[k] = m.real();
  }
  CMatrix S = CMatrix::Zero(n, n);
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (weights[i] == 0.0) continue;
    CMatrix Y(vecs[i].size(), n);
    for (int k = 0; k < n; ++k) Y.col(k) = ops[k].entries * vecs[i] - means[k] * vecs[i];
    S += weights[i] * (Y.adjoint() * Y);
  }
  const RMatrix re = S.real(), im = S.imag();
  return {means, (re + re.transpose()) / 2.0, (im - im.transpose()) / 2.0};
}

}  // namespace detail

/// Exact second moments; operators may be built on a larger basis than the state.
inline MomentSet moments(const FockVector& s, const std::vector<OperatorMatrix>& ops) {
  const int d = detail::common_dim(ops);
  require(d >= s.dim(), ErrorKind::DimensionMismatch, "operators smaller than state");
  require(std::abs(s.norm() - 1.0) <= 1e-10, ErrorKind::NonPhysicalState, "state not normalized");
  require_physical(s);
  return detail::from_gram(ops, {detail::padded_vec(s.coeffs(), d)}, {1.0});
}

inline MomentSet moments(const DensityMatrix& rho, const std::vector<OperatorMatrix>& ops) {
  const int d = detail::common_dim(ops);
  require(d >= rho.dim(), ErrorKind::DimensionMismatch, "operators smaller than state");
  require_physical(rho);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.entries());
  std::vector<CVector> vecs;
  std::vector<double> w;
  for (int i = 0; i < rho.dim(); ++i) {
    vecs.push_back(detail::padded_vec(es.eigenvectors().col(i), d));
    w.push_back(std::max(0.0, es.eigenvalues()[i]));
  }
  return detail::from_gram(ops, vecs, w);
}

inline MomentSet moments(const State& s, const std::vector<OperatorMatrix>& ops) {
  return std::visit([&](const auto& x) { return moments(x, ops); }, s);
}

/// C_0..C_n of det(M - lambda I) as sums of principal minors.
inline std::vector<double> char_coeffs(const RMatrix& M) {
  const int n = static_cast<int>(M.rows());
  require(M.rows() == M.cols(), ErrorKind::DimensionMismatch, "char_coeffs needs a square matrix");
  require(n <= 8, ErrorKind::TooLarge, "principal-minor enumeration capped at n = 8");
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int r = static_cast<int>(idx.size());
    RMatrix sub(r, r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) sub(a, b) = M(idx[a], idx[b]);
    c[r] += r == 1 ? sub(0, 0) : sub.determinant();
  }
  return c;
}

inline double cur_slack(const MomentSet& ms, int r) {
  require(r >= 1 && r <= ms.n(), ErrorKind::DimensionMismatch, "order out of range");
  return char_coeffs(ms.sigma)[r] - char_coeffs(ms.cmat)[r];
}

inline double robertson_slack(const MomentSet& ms) { return cur_slack(ms, ms.n()); }

inline double schrodinger_slack(const MomentSet& ms, int i = 0, int j = 1) {
  require(ms.n() >= 2, ErrorKind::DimensionMismatch, "Schrodinger slack needs two observables");
  return ms.sigma(i, i) * ms.sigma(j, j) - ms.sigma(i, j) * ms.sigma(i, j) - ms.cmat(i, j) * ms.cmat(i, j);
}

inline double heisenberg_slack(const MomentSet& ms, int i = 0, int j = 1) {
  return ms.sigma(i, i) * ms.sigma(j, j) - ms.cmat(i, j) * ms.cmat(i, j);
}

inline MomentSet transform_covariances(const MomentSet& ms, const RMatrix& L) {
  require(L.rows() == ms.n() && L.cols() == ms.n(), ErrorKind::DimensionMismatch, "transform size mismatch");
  require(std::abs(L.determinant()) > 1e-14, ErrorKind::SingularTransform, "transformation is singular");
  return {L * ms.means, L * ms.sigma * L.transpose(), L * ms.cmat * L.transpose()};
}

struct PredictedMoments {
  double s11, s22, s12;
};

/// Second moments of an eigenstate of u(X1 - iX2) + v(X1 + iX2); c12 = (i/2)<[X1, X2]>.
inline PredictedMoments ous_predicted_moments(Complex u, Complex v, double c12) {
  const double den = std::norm(u) - std::norm(v);
  require(std::abs(den) > 1e-14, ErrorKind::DegenerateFrame, "|u| = |v|");
  return {std::norm(u - v) * c12 / den, std::norm(u + v) * c12 / den,
          2.0 * (std::conj(u) * v).imag() * c12 / den};
}

/// sigma = B^{-1} [[0, Ct], [Ct^T, 0]] B^{-T}, B = [[U+V, i(U-V)], [(U+V)*, i(V*-U*)]],
/// ordering (X_1..X_N, X_{N+1}..X_{2N}) with a_mu = X_mu + i X_{mu+N}.
inline RMatrix multimode_predicted_sigma(const CMatrix& U, const CMatrix& V, const CMatrix& ctilde) {
  const Eigen::Index N = U.rows();
  CMatrix B(2 * N, 2 * N);
  B << U + V, I * (U - V), (U + V).conjugate(), I * (V.conjugate() - U.conjugate());
  Eigen::FullPivLU<CMatrix> lu(B);
  require(lu.isInvertible(), ErrorKind::SingularFrameMatrix, "frame matrix is singular");
  CMatrix M = CMatrix::Zero(2 * N, 2 * N);
  M.topRightCorner(N, N) = ctilde;
  M.bottomLeftCorner(N, N) = ctilde.transpose();
  const CMatrix Binv = lu.inverse();
  const CMatrix s = Binv * M * Binv.transpose();
  const RMatrix re = s.real();
  return (re + re.transpose()) / 2.0;
}

struct WeightedMoments {
  MomentSet ms;
  double weight;
};

inline double extended_cur_slack(const std::vector<WeightedMoments>& items, int r) {
  require(!items.empty(), ErrorKind::EmptyInput, "no moment sets");
  const int n = items[0].ms.n();
  RMatrix s = RMatrix::Zero(n, n), c = RMatrix::Zero(n, n);
  bool positive = false;
  for (const auto& it : items) {
    require(it.ms.n() == n, ErrorKind::DimensionMismatch, "moment sets differ in size");
    require(it.weight >= 0.0, ErrorKind::EmptyInput, "negative weight");
    positive = positive || it.weight > 0.0;
    s += it.weight * it.ms.sigma;
    c += it.weight * it.ms.cmat;
  }
  require(positive, ErrorKind::EmptyInput, "no positive weight");
  require(r >= 1 && r <= n, ErrorKind::DimensionMismatch, "order out of range");
  return char_coeffs(s)[r] - char_coeffs(c)[r];
}

/// Two-state Schrodinger-type relation for observables X, Y.
inline double two_state_schrodinger_slack(const FockVector& a, const FockVector& b, const OperatorMatrix& X,
                                          const OperatorMatrix& Y) {
  require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "states differ in dimension");
  const MomentSet m1 = moments(a, {X, Y}), m2 = moments(b, {X, Y});
  return 0.5 * (m1.sigma(0, 0) * m2.sigma(1, 1) + m2.sigma(0, 0) * m1.sigma(1, 1)) -
         m1.sigma(0, 1) * m2.sigma(0, 1) - m1.cmat(0, 1) * m2.cmat(0, 1);
}

enum class TwoStateForm { AsPrinted, SchwarzForm };

inline double one_obs_two_state_slack(const FockVector& a, const FockVector& b, const OperatorMatrix& X,
                                      TwoStateForm form) {
  require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "states differ in dimension");
  const int d = X.dim();
  const MomentSet m1 = moments(a, {X}), m2 = moments(b, {X});
  const CVector p1 = detail::padded_vec(a.coeffs(), d), p2 = detail::padded_vec(b.coeffs(), d);
  const double s1 = m1.sigma(0, 0), s2 = m2.sigma(0, 0);
  if (form == TwoStateForm::AsPrinted) {
    const Complex x2 = (X.entries * p2).dot(X.entries * p1);
    return s1 * s2 - std::norm(x2) + s1 * m2.means[0] * m2.means[0] + s2 * m1.means[0] * m1.means[0];
  }
  const CVector y1 = X.entries * p1 - m1.means[0] * p1, y2 = X.entries * p2 - m2.means[0] * p2;
  return s1 * s2 - std::norm(y2.dot(y1));
}

inline double psd_check(const MomentSet& ms) {
  const CMatrix h = ms.sigma.cast<Complex>() + I * ms.cmat.cast<Complex>();
  return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

struct SheafSpectrum {
  RVector roots;          // ascending
  double pairing_error;   // max |lambda_i + lambda_{n-1-i}|
  double max_abs;
  double det_identity_error;  // |det C / det sigma - prod over pairs of lambda^2|
};

/// Roots of det(iC - lambda sigma) = 0 via the Cholesky-reduced Hermitian problem.
inline SheafSpectrum sheaf_spectrum(const RMatrix& sigma, const RMatrix& cmat) {
  Eigen::LLT<RMatrix> llt(sigma);
  require(llt.info() == Eigen::Success, ErrorKind::SingularSigma, "sigma is not positive definite");
  const RMatrix L = llt.matrixL();
  const RMatrix Linv = L.inverse();
  const CMatrix W = I * (Linv * cmat * Linv.transpose()).cast<Complex>();
  const CMatrix Wh = (W + W.adjoint()) / 2.0;
  const RVector ev = Eigen::SelfAdjointEigenSolver<CMatrix>(Wh, Eigen::EigenvaluesOnly).eigenvalues();
  const Eigen::Index n = ev.size();
  SheafSpectrum out;
  out.roots = ev;
  out.pairing_error = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) out.pairing_error = std::max(out.pairing_error, std::abs(ev[i] + ev[n - 1 - i]));
  out.max_abs = ev.cwiseAbs().maxCoeff();
  double prod = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) prod *= std::abs(ev[i]);
  out.det_identity_error = std::abs(cmat.determinant() / sigma.determinant() - prod);
  return out;
}

struct UncertaintyReport {
  std::vector<double> char_sigma;  // C_1..C_n
  std::vector<double> char_cmat;
  std::vector<double> slacks;      // r = 1..n
  std::vector<int> equality_orders;
  double tolerance = kEqualityTol;
  double psd_min_eig = 0.0;

  double scale(int r) const { return std::max(1.0, char_sigma[r - 1]); }
  bool equal(int r) const { return std::abs(slacks[r - 1]) <= tolerance * scale(r); }
};

inline UncertaintyReport build_report(const MomentSet& ms, double tolerance = kEqualityTol) {
  UncertaintyReport rep;
  rep.tolerance = tolerance;
  const auto cs = char_coeffs(ms.sigma), cc = char_coeffs(ms.cmat);
  for (int r = 1; r <= ms.n(); ++r) {
    rep.char_sigma.push_back(cs[r]);
    rep.char_cmat.push_back(cc[r]);
    rep.slacks.push_back(cs[r] - cc[r]);
  }
  for (int r = 1; r <= ms.n(); ++r)
    if (rep.equal(r)) rep.equality_orders.push_back(r);
  rep.psd_min_eig = psd_check(ms);
  return rep;
}

}  // namespace uncstates
