#include <gtest/gtest.h>

#include <cmath>

#include "uncstates/uncstates.hpp"

using namespace uncstates;

namespace {

FockVector fock(int n, int dim) {
  CVector c = CVector::Zero(dim);
  c[n] = 1.0;
  return FockVector(RepSpec::heisenberg(dim), c);
}

struct Osc {
  OperatorSet ops = build_rep(RepSpec::heisenberg(34));
  std::vector<OperatorMatrix> qp() const { return {*ops.position, *ops.momentum}; }
};

}  // namespace

TEST(ComplementaryPair, VacuumSumRule) {
  Osc o;
  const ComplementaryPair cp = complementary_pair(build_report(moments(fock(0, 32), o.qp())), 2);
  EXPECT_NEAR(cp.alpha_r, 0.5, 1e-15);
  EXPECT_NEAR(cp.P_sq, 0.5, 1e-15);
  EXPECT_NEAR(cp.V_sq, 0.5, 1e-15);
}

TEST(ComplementaryPair, FirstExcitedState) {
  Osc o;
  const ComplementaryPair cp = complementary_pair(build_report(moments(fock(1, 32), o.qp())), 2);
  EXPECT_NEAR(cp.P_sq, 0.1, 1e-14);
  EXPECT_NEAR(cp.V_sq, 0.1, 1e-14);
}

TEST(ComplementaryPair, CommutingObservablesHaveNoCommutatorPart) {
  Osc o;
  const OperatorMatrix n2(o.ops.cartan.entries * o.ops.cartan.entries, true, 32);
  const ComplementaryPair cp =
      complementary_pair(build_report(moments(canonical_cs(0.7, 32), {o.ops.cartan, n2})), 2);
  EXPECT_NEAR(cp.V_sq, 0.0, 1e-15);
}

TEST(ComplementaryPair, BoundedMaxKeepsUnitInterval) {
  Osc o;
  const UncertaintyReport rep = build_report(moments(fock(2, 32), o.qp()));
  const ComplementaryPair cp = complementary_pair(rep, 2, Scaling::bounded_max(10.0));
  EXPECT_GE(cp.P_sq, 0.0);
  EXPECT_LE(cp.P_sq + cp.V_sq, 1.0 + 1e-10);
  EXPECT_THROW(complementary_pair(rep, 2, Scaling::bounded_max(1.0)), Error);
}

TEST(GFunctional, IdenticalAndOrthogonal) {
  Osc o;
  const FockVector cs = canonical_cs({0.3, 0.5}, 32);
  EXPECT_NEAR(g_functional(cs, cs), 1.0, 1e-14);
  EXPECT_NEAR(g_functional(cs, cs, GKind::xsquared(*o.ops.position)), 1.0, 1e-14);
  EXPECT_NEAR(g_functional(fock(0, 32), fock(1, 32)), 0.0, 1e-15);
  EXPECT_NEAR(g_functional(fock(0, 32), fock(1, 32), GKind::xsquared(*o.ops.position)), 0.0, 1e-15);
}

TEST(GFunctional, PureStateTraceOverlapIsFidelity) {
  const FockVector a = canonical_cs(0.5, 32), b = canonical_cs(-0.5, 32);
  EXPECT_NEAR(g_functional(a, b), std::exp(-1.0), 1e-14);
  EXPECT_NEAR(g_functional(DensityMatrix::pure(a), b), std::exp(-1.0), 1e-14);
}

TEST(Distance, SelfSymmetryAndDirectValue) {
  Osc o;
  const FockVector a = canonical_cs({0.2, -0.4}, 32), b = displaced_squeezed(0.1, SqueezeFrame::from_r(0.3), 32);
  EXPECT_NEAR(distance_r(a, a, o.qp(), 2), 0.0, 1e-14);
  EXPECT_EQ(distance_r(a, b, o.qp(), 2), distance_r(b, a, o.qp(), 2));
  EXPECT_GE(distance_r(a, b, o.qp(), 2), 0.0);
  EXPECT_NEAR(distance_r(fock(0, 32), fock(1, 32), o.qp(), 2), 2.5, 1e-14);
}
