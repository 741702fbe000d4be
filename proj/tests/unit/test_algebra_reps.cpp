#include <gtest/gtest.h>

#include <cmath>

#include "uncstates/uncstates.hpp"

using namespace uncstates;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

CMatrix comm(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

}  // namespace

TEST(RepSpec, ValidatesParameters) {
  EXPECT_THROW(RepSpec::su11(0.0, 10).validate(), Error);
  EXPECT_THROW(RepSpec::su2(0.3).validate(), Error);
  EXPECT_THROW(RepSpec::qboson(-1.0, 10).validate(), Error);
  EXPECT_NO_THROW(RepSpec::su2(1.5).validate());
  EXPECT_EQ(RepSpec::su2(1.5).dim(), 4);
  EXPECT_EQ(RepSpec::heisenberg(20).dim(), 20);
}

TEST(BuildRep, SpinHalfCartan) {
  const OperatorSet ops = build_rep(RepSpec::su2(0.5));
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = -0.5;
  expect(1, 1) = 0.5;
  EXPECT_LT(max_abs(ops.cartan.entries - expect), 1e-15);
  // Pauli relations: J- = [[0,1],[0,0]]
  EXPECT_NEAR(std::abs(ops.ladder_minus.entries(0, 1) - 1.0), 0.0, 1e-15);
}

TEST(BuildRep, OneModeCartanIsHalfNumberPlusQuarter) {
  const int d = 30;
  const OperatorSet ops = build_rep(RepSpec::one_mode(Parity::Even, d));
  const OperatorSet hw = build_rep(RepSpec::heisenberg(d));
  const CMatrix expect = hw.cartan.entries / 2.0 + 0.25 * CMatrix::Identity(d, d);
  EXPECT_LT(max_abs(ops.cartan.entries - expect), 1e-15);
  const CMatrix a = hw.ladder_minus.entries;
  EXPECT_LT(max_abs(ops.ladder_minus.entries - a * a / 2.0), 1e-14);
}

TEST(BuildRep, QBosonNumberAction) {
  const double q = 1.7;
  const OperatorSet ops = build_rep(RepSpec::qboson(q, 20));
  const CMatrix n = ops.ladder_plus.entries * ops.ladder_minus.entries;
  for (int k = 0; k < 20; ++k) EXPECT_NEAR(n(k, k).real(), (std::pow(q, k) - std::pow(q, -k)) / (q - 1 / q), 1e-9 * (1 + n(k, k).real()));
}

TEST(BuildRep, GeneratorsAreHermitianOrAdjoint) {
  for (const RepSpec& s : {RepSpec::heisenberg(20), RepSpec::su11(0.75, 20), RepSpec::su2(2.0), RepSpec::suq11(1.0, 0.6, 20),
                           RepSpec::suq2(1.5, 1.3), RepSpec::one_mode(Parity::Odd, 20)}) {
    const OperatorSet ops = build_rep(s);
    EXPECT_LT(max_abs(ops.ladder_plus.entries - ops.ladder_minus.entries.adjoint()), 1e-15) << s.label();
    EXPECT_LT(max_abs(ops.hermitian_x1.entries - ops.hermitian_x1.entries.adjoint()), 1e-14) << s.label();
    EXPECT_LT(max_abs(ops.hermitian_x2.entries - ops.hermitian_x2.entries.adjoint()), 1e-14) << s.label();
  }
}

TEST(HermitianComponents, OscillatorQuadratures) {
  const OperatorSet ops = build_rep(RepSpec::heisenberg(16));
  EXPECT_LT(max_abs(ops.hermitian_x1.entries - ops.position->entries / std::sqrt(2.0)), 1e-15);
  EXPECT_LT(max_abs(ops.hermitian_x2.entries + ops.momentum->entries / std::sqrt(2.0)), 1e-15);
  EXPECT_LT(max_abs(ops.hermitian_x1.entries - I * ops.hermitian_x2.entries - ops.ladder_minus.entries), 1e-15);
}

TEST(HermitianComponents, Su11Generators) {
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, 24));
  const CMatrix k1 = (ops.ladder_plus.entries + ops.ladder_minus.entries) / 2.0;
  const CMatrix k2 = (ops.ladder_plus.entries - ops.ladder_minus.entries) / (2.0 * I);
  EXPECT_LT(max_abs(ops.hermitian_x1.entries - k1), 1e-15);
  EXPECT_LT(max_abs(ops.hermitian_x2.entries - k2), 1e-15);
  EXPECT_LT(max_abs(ops.hermitian_x1.entries - I * ops.hermitian_x2.entries - ops.ladder_minus.entries), 1e-15);
}

TEST(OperatorMatrix, RejectsFalseHermitianFlag) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(OperatorMatrix(m, true, 2), Error);
}

TEST(Commutators, OscillatorCanonical) {
  const OperatorSet ops = build_rep(RepSpec::heisenberg(40));
  const OperatorMatrix one(CMatrix::Identity(40, 40), true, 40);
  EXPECT_LE(commutator_residual(ops.ladder_minus, ops.ladder_plus, one), 1e-13);
}

TEST(Commutators, Su11ClosesOnInterior) {
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, 64));
  const OperatorMatrix two_k3(2.0 * ops.cartan.entries, true, ops.cartan.interior);
  EXPECT_LE(commutator_residual(ops.ladder_minus, ops.ladder_plus, two_k3), 1e-12);
  // The last slot is corrupted by the truncation; the full matrix does not close.
  EXPECT_GT(max_abs(comm(ops.ladder_minus.entries, ops.ladder_plus.entries) - two_k3.entries), 1.0);
}

TEST(Commutators, Su2ClosesExactly) {
  const OperatorSet ops = build_rep(RepSpec::su2(2.5));
  EXPECT_LT(max_abs(comm(ops.ladder_plus.entries, ops.ladder_minus.entries) - 2.0 * ops.cartan.entries), 1e-13);
  EXPECT_LT(max_abs(comm(ops.cartan.entries, ops.ladder_plus.entries) - ops.ladder_plus.entries), 1e-13);
}

TEST(Commutators, DeformedSu11) {
  const double q = 0.7;
  const OperatorSet ops = build_rep(RepSpec::suq11(1.0, q, 40));
  const OperatorMatrix rhs = q_bracket_of_diagonal(ops.cartan, 2.0, q);
  // q-numbers grow like q^{-n}; compare relative to the largest interior entry.
  const double scale = rhs.entries.topLeftCorner(rhs.interior, rhs.interior).cwiseAbs().maxCoeff();
  EXPECT_LE(commutator_residual(ops.ladder_minus, ops.ladder_plus, rhs) / scale, 1e-12);
  const OperatorSet small = build_rep(RepSpec::suq11(1.0, q, 12));
  EXPECT_LE(commutator_residual(small.ladder_minus, small.ladder_plus, q_bracket_of_diagonal(small.cartan, 2.0, q)), 1e-12);
}

TEST(Commutators, DeformedSu2) {
  const double q = 1.6;
  const OperatorSet ops = build_rep(RepSpec::suq2(2.0, q));
  const CMatrix c = comm(ops.ladder_plus.entries, ops.ladder_minus.entries);
  for (int n = 0; n < 5; ++n) EXPECT_NEAR(c(n, n).real(), q_bracket(2.0 * (n - 2.0), q), 1e-12);
}

TEST(PrimedOps, ClosureOnInterior) {
  const OperatorSet ops = build_rep(RepSpec::su11(0.5, 48));
  const PrimedOps p = primed_su11_ops(2.0, 1.0, ops);
  EXPECT_LE(commutator_residual(p.k3, p.kplus, p.kplus), 1e-10);
  const OperatorMatrix neg(-p.kminus.entries, false, p.kminus.interior);
  EXPECT_LE(commutator_residual(p.k3, p.kminus, neg), 1e-10);
  const OperatorMatrix two_k3(2.0 * p.k3.entries, false, p.k3.interior);
  EXPECT_LE(commutator_residual(p.kminus, p.kplus, two_k3), 1e-10);
}

TEST(PrimedOps, UnitParametersGiveIK1) {
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, 20));
  const PrimedOps p = primed_su11_ops(1.0, 1.0, ops);
  const CMatrix k1 = (ops.ladder_plus.entries + ops.ladder_minus.entries) / 2.0;
  EXPECT_LT(max_abs(p.k3.entries - I * k1), 1e-15);
}

TEST(PrimedOps, RaisingShiftsEigenvalue) {
  // K'+ maps an eigenvector of uK- + vK+ to one with eigenvalue shifted by -2i sqrt(uv).
  const Complex u = 2.0, v = Complex(0.6, 0.3), z = Complex(0.4, -0.2);
  const int dim = 120;
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, dim + 2));
  OUSParams par;
  par.u = u;
  par.v = v;
  par.z = z;
  const FockVector s = ladder_ous(ops, par, dim);
  const PrimedOps p = primed_su11_ops(u, v, ops);
  const CVector c = detail::padded_vec(s.coeffs(), dim + 2);
  const CVector w = p.kplus.entries * c;
  const CMatrix M = u * ops.ladder_minus.entries + v * ops.ladder_plus.entries;
  const Complex shifted = z - 2.0 * I * v * csqrt(u / v);
  const int m = dim - 2;
  const double res = (M * w - shifted * w).head(m).norm() / w.head(m).norm();
  EXPECT_LT(res, 1e-9);
}
