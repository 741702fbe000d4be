#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>

#include "uncstates/core.hpp"
#include "uncstates/rep_spec.hpp"

namespace uncstates {

/// Amplitude vector over a truncated ladder basis.
class FockVector {
 public:
  FockVector() = default;
  FockVector(RepSpec label, CVector coeffs) : label_(std::move(label)), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() > 0, ErrorKind::DimensionMismatch, "empty amplitude vector");
  }

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const CVector& coeffs() const { return coeffs_; }
  const RepSpec& label() const { return label_; }
  Complex operator[](int n) const { return coeffs_[n]; }
  double norm() const { return coeffs_.norm(); }

  FockVector normalized() const {
    const double nrm = norm();
    require(nrm > 0.0, ErrorKind::NonPhysicalState, "zero vector cannot be normalized");
    return FockVector(label_, coeffs_ / nrm);
  }

  /// First amplitude above 1e-300 in modulus made real positive.
  FockVector phase_fixed() const {
    for (int n = 0; n < dim(); ++n) {
      const double m = std::abs(coeffs_[n]);
      if (m > 1e-300) return FockVector(label_, coeffs_ * (std::conj(coeffs_[n]) / m));
    }
    return *this;
  }

  /// Zero-extends to a larger dimension.
  FockVector padded(int new_dim) const {
    require(new_dim >= dim(), ErrorKind::DimensionMismatch, "cannot pad to a smaller dimension");
    require(label_.modes == 1 || new_dim == dim(), ErrorKind::DimensionMismatch,
            "tensor-basis states cannot be zero-padded");
    CVector c = CVector::Zero(new_dim);
    c.head(dim()) = coeffs_;
    return FockVector(label_.finite() ? label_ : label_.with_truncation(new_dim), c);
  }

  FockVector truncated(int new_dim) const {
    require(new_dim <= dim() && new_dim > 0, ErrorKind::DimensionMismatch, "bad truncation");
    return FockVector(label_.finite() ? label_ : label_.with_truncation(new_dim), coeffs_.head(new_dim));
  }

 private:
  RepSpec label_;
  CVector coeffs_;
};

/// Mixed state on a truncated basis.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(RepSpec label, CMatrix entries) : label_(std::move(label)), entries_(std::move(entries)) {
    require(entries_.rows() == entries_.cols() && entries_.rows() > 0, ErrorKind::DimensionMismatch,
            "density matrix must be square");
    require((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= kNormTol, ErrorKind::NonPhysicalState,
            "density matrix not Hermitian");
    require(std::abs(entries_.trace() - 1.0) <= kNormTol, ErrorKind::NonPhysicalState, "trace differs from 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(entries_);
    require(es.eigenvalues().minCoeff() >= -kPsdTol, ErrorKind::NonPhysicalState,
            "density matrix has a negative eigenvalue");
  }

  static DensityMatrix pure(const FockVector& psi) {
    return DensityMatrix(psi.label(), psi.coeffs() * psi.coeffs().adjoint());
  }

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  const RepSpec& label() const { return label_; }
  double trace() const { return entries_.trace().real(); }

 private:
  RepSpec label_;
  CMatrix entries_;
};

using State = std::variant<FockVector, DensityMatrix>;

/// Dense operator with Hermiticity flag and valid-interior bound.
struct OperatorMatrix {
  CMatrix entries;
  bool hermitian = false;
  int interior = 0;
  std::string name;

  OperatorMatrix() = default;
  OperatorMatrix(CMatrix m, bool herm, int interior_bound, std::string nm = {})
      : entries(std::move(m)), hermitian(herm), interior(interior_bound), name(std::move(nm)) {
    if (hermitian)
      require((entries - entries.adjoint()).cwiseAbs().maxCoeff() <= 1e-14, ErrorKind::ImaginaryExpectation,
              "operator flagged Hermitian is not");
  }

  int dim() const { return static_cast<int>(entries.rows()); }
  OperatorMatrix adjoint() const { return OperatorMatrix(entries.adjoint(), hermitian, interior, name + "^+"); }
};

inline Complex inner_product(const FockVector& a, const FockVector& b) {
  require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "inner_product dimensions differ");
  return a.coeffs().dot(b.coeffs());
}

/// Sum of |c_n|^2 over [lo, hi).
inline double tail_mass(const FockVector& s, int lo, int hi) {
  lo = std::max(lo, 0);
  hi = std::min(hi, s.dim());
  double m = 0.0;
  for (int n = lo; n < hi; ++n) m += std::norm(s[n]);
  return m;
}

/// Mass in the top guard window; for tensor states, of any mode.
inline double guard_tail_mass(const FockVector& s) {
  const RepSpec& l = s.label();
  if (l.finite()) return 0.0;
  if (l.modes == 1) return tail_mass(s, s.dim() - kGuardWindow, s.dim());
  const int d = l.truncation;
  double m = 0.0;
  for (int idx = 0; idx < s.dim(); ++idx) {
    int rest = idx;
    bool top = false;
    for (int mode = 0; mode < l.modes; ++mode) {
      if (rest % d >= d - kGuardWindow) top = true;
      rest /= d;
    }
    if (top) m += std::norm(s[idx]);
  }
  return m;
}

inline double guard_tail_mass(const DensityMatrix& rho) {
  if (rho.label().finite()) return 0.0;
  double m = 0.0;
  for (int n = std::max(0, rho.dim() - kGuardWindow); n < rho.dim(); ++n) m += rho.entries()(n, n).real();
  return m;
}

namespace detail {

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace detail

template <typename S>
void require_physical(const S& s, double guard = kTruncationGuard) {
  const double t = guard_tail_mass(s);
  if (t > guard)
    fail(ErrorKind::NonPhysicalState, "tail mass exceeds truncation guard (" + detail::sci(t) + ")");
}

namespace detail {

inline CMatrix padded_op(const OperatorMatrix& op, int state_dim) {
  require(op.dim() >= state_dim, ErrorKind::DimensionMismatch, "operator smaller than state");
  return op.entries;
}

inline CVector padded_vec(const CVector& c, int dim) {
  if (c.size() == dim) return c;
  CVector out = CVector::Zero(dim);
  out.head(c.size()) = c;
  return out;
}

inline CMatrix padded_mat(const CMatrix& m, int dim) {
  if (m.rows() == dim) return m;
  CMatrix out = CMatrix::Zero(dim, dim);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

inline void check_real(const OperatorMatrix& op, Complex v) {
  if (op.hermitian && std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real())))
    fail(ErrorKind::ImaginaryExpectation, "Hermitian operator has complex mean");
}

}  // namespace detail

/// Mean value; the operator may be built on a larger basis than the state (zero padding).
inline Complex expectation_value(const OperatorMatrix& op, const FockVector& s) {
  require(std::abs(s.norm() - 1.0) <= 1e-10, ErrorKind::NonPhysicalState, "state not normalized");
  require_physical(s);
  const CVector c = detail::padded_vec(s.coeffs(), op.dim());
  require(op.dim() >= s.dim(), ErrorKind::DimensionMismatch, "operator smaller than state");
  const Complex v = c.dot(op.entries * c);
  detail::check_real(op, v);
  return v;
}

inline Complex expectation_value(const OperatorMatrix& op, const DensityMatrix& rho) {
  require(op.dim() >= rho.dim(), ErrorKind::DimensionMismatch, "operator smaller than state");
  require_physical(rho);
  const CMatrix r = detail::padded_mat(rho.entries(), op.dim());
  const Complex v = (r * op.entries).trace();
  detail::check_real(op, v);
  return v;
}

inline Complex expectation_value(const OperatorMatrix& op, const State& s) {
  return std::visit([&](const auto& x) { return expectation_value(op, x); }, s);
}

inline int state_dim(const State& s) {
  return std::visit([](const auto& x) { return x.dim(); }, s);
}

}  // namespace uncstates
