#pragma once

#include <cmath>
#include <optional>

#include "uncstates/uncertainty.hpp"

namespace uncstates {

struct ComplementaryPair {
  int r = 2;
  double alpha_r = 1.0;
  double P_sq = 0.0;
  double V_sq = 0.0;
};

struct Scaling {
  enum Kind { SumRule, BoundedMax } kind = SumRule;
  double max_value = 0.0;

  static Scaling sum_rule() { return {}; }
  static Scaling bounded_max(double m) { return {BoundedMax, m}; }
};

/// P^2 = 1 - C_r(sigma)/alpha_r, V^2 = C_r(C)/alpha_r.
/// SumRule: alpha_r = C_r(sigma) + C_r(C). BoundedMax: alpha_r = supplied maximum of C_r(sigma).
inline ComplementaryPair complementary_pair(const UncertaintyReport& rep, int r, Scaling scaling = {}) {
  require(r >= 1 && r <= static_cast<int>(rep.char_sigma.size()), ErrorKind::DimensionMismatch, "order out of range");
  const double cs = rep.char_sigma[r - 1], cc = rep.char_cmat[r - 1];
  double alpha = 0.0;
  if (scaling.kind == Scaling::SumRule) {
    alpha = cs + cc;
    require(alpha > 0.0, ErrorKind::ZeroScale, "C_r(sigma) + C_r(C) must be positive");
  } else {
    require(scaling.max_value > 0.0, ErrorKind::ZeroScale, "maximum must be positive");
    require(cs <= scaling.max_value * (1.0 + 1e-10), ErrorKind::ZeroScale, "C_r(sigma) exceeds supplied maximum");
    alpha = scaling.max_value;
  }
  return {r, alpha, 1.0 - cs / alpha, cc / alpha};
}

struct GKind {
  enum Kind { TraceOverlap, XSquared } kind = TraceOverlap;
  std::optional<OperatorMatrix> x;

  static GKind trace() { return {}; }
  static GKind xsquared(OperatorMatrix op) { return {XSquared, std::move(op)}; }
};

namespace detail {

inline CMatrix as_density(const State& s, int d) {
  if (const auto* p = std::get_if<FockVector>(&s)) {
    const CVector c = padded_vec(p->coeffs(), d);
    return c * c.adjoint();
  }
  return padded_mat(std::get<DensityMatrix>(s).entries(), d);
}

}  // namespace detail

/// Overlap functional in [0, 1]; symmetric in its arguments by construction.
inline double g_functional(const State& a, const State& b, const GKind& kind = {}) {
  require(state_dim(a) == state_dim(b), ErrorKind::DimensionMismatch, "states differ in dimension");
  if (kind.kind == GKind::TraceOverlap) {
    const int d = state_dim(a);
    const CMatrix r1 = detail::as_density(a, d), r2 = detail::as_density(b, d);
    const double t12 = (r1 * r2).trace().real(), t21 = (r2 * r1).trace().real();
    const double p1 = (r1 * r1).trace().real(), p2 = (r2 * r2).trace().real();
    return 0.5 * (t12 + t21) / std::sqrt(p1 * p2);
  }
  const auto* p1 = std::get_if<FockVector>(&a);
  const auto* p2 = std::get_if<FockVector>(&b);
  require(p1 && p2 && kind.x, ErrorKind::ZeroDenominator, "XSquared functional needs pure states and X");
  const OperatorMatrix& X = *kind.x;
  const CVector x1 = X.entries * detail::padded_vec(p1->coeffs(), X.dim());
  const CVector x2 = X.entries * detail::padded_vec(p2->coeffs(), X.dim());
  const double n1 = x1.squaredNorm(), n2 = x2.squaredNorm();
  require(n1 > 1e-300 && n2 > 1e-300, ErrorKind::ZeroDenominator, "X annihilates a state");
  return std::abs(x2.dot(x1)) / std::sqrt(n1 * n2);
}

/// D^2 = C_r(sigma_1) + C_r(sigma_2) - 2 sqrt(C_r(sigma_1) C_r(sigma_2)) g.
inline double distance_r(const State& a, const State& b, const std::vector<OperatorMatrix>& ops, int r,
                         const GKind& kind = {}) {
  const double c1 = char_coeffs(moments(a, ops).sigma)[r];
  const double c2 = char_coeffs(moments(b, ops).sigma)[r];
  require(c1 > 0.0 && c2 > 0.0, ErrorKind::NonPositiveCoefficient, "C_r(sigma) must be positive");
  return c1 + c2 - 2.0 * std::sqrt(c1 * c2) * g_functional(a, b, kind);
}

}  // namespace uncstates
