#include <gtest/gtest.h>

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "uncstates/uncstates.hpp"

using namespace uncstates;

namespace {

double fidelity(const FockVector& a, const FockVector& b) { return std::norm(inner_product(a, b)); }

double binom(double n, double k) { return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)); }

// Residual ||(M - z) psi|| with M acting on a space one level larger than psi.
double residual(const CMatrix& M, const FockVector& s, Complex z) {
  const CVector c = detail::padded_vec(s.coeffs(), static_cast<int>(M.rows()));
  return (M * c - z * c).norm();
}

// Same, restricted to the interior (top two slots of the state excluded).
double interior_residual(const CMatrix& M, const FockVector& s, Complex z) {
  const CVector c = detail::padded_vec(s.coeffs(), static_cast<int>(M.rows()));
  return (M * c - z * c).head(s.dim() - 2).norm();
}

MomentSet pair_moments(const FockVector& s, const OperatorSet& ops) { return moments(s, {ops.hermitian_x1, ops.hermitian_x2}); }

}  // namespace

TEST(CanonicalCS, VacuumAtZero) {
  const FockVector s = canonical_cs(0.0, 32);
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, 1e-15);
  EXPECT_LT(s.coeffs().tail(31).norm(), 1e-15);
}

TEST(CanonicalCS, PoissonAmplitudes) {
  const Complex a(0.8, -0.6);
  const FockVector s = canonical_cs(a, 64);
  for (int n = 0; n < 20; ++n) {
    const Complex oracle = std::exp(-0.5 * std::norm(a)) * std::pow(a, n) / std::sqrt(std::tgamma(n + 1.0));
    EXPECT_NEAR(std::abs(s[n] - oracle), 0.0, 1e-14);
  }
}

TEST(CanonicalCS, QuadratureMomentsAtUnitAlpha) {
  const OperatorSet ops = build_rep(RepSpec::heisenberg(66));
  const MomentSet ms = moments(canonical_cs(1.0, 64), {*ops.position, *ops.momentum});
  EXPECT_NEAR(ms.sigma(0, 0), 0.5, 1e-12);
  EXPECT_NEAR(ms.sigma(1, 1), 0.5, 1e-12);
  EXPECT_NEAR(ms.means[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(ms.means[1], 0.0, 1e-12);
}

TEST(DisplacedSqueezed, IdentityFrameIsCoherent) {
  const Complex a(0.4, 0.9);
  EXPECT_GT(fidelity(displaced_squeezed(a, SqueezeFrame(1.0, 0.0), 64), canonical_cs(a, 64)), 1.0 - 1e-14);
}

TEST(DisplacedSqueezed, SqueezedVarianceOfFirstQuadrature) {
  const double r = 0.5;
  const OperatorSet ops = build_rep(RepSpec::heisenberg(66));
  const MomentSet ms = pair_moments(displaced_squeezed(0.0, SqueezeFrame(std::cosh(r), std::sinh(r)), 64), ops);
  const double c12 = -ms.cmat(0, 1);
  EXPECT_NEAR(c12, 0.25, 1e-12);
  EXPECT_NEAR(ms.sigma(0, 0), std::exp(-2 * r) * c12, 1e-12);
  EXPECT_NEAR(ms.sigma(1, 1), std::exp(2 * r) * c12, 1e-12);
}

TEST(DisplacedSqueezed, EigenResidualAndCrossConstruction) {
  const OperatorSet ops = build_rep(RepSpec::heisenberg(65));
  for (double r : {0.2, 0.5, 0.7})
    for (double theta : {0.0, 1.1, -2.4}) {
      const SqueezeFrame fr = SqueezeFrame::from_r(r, theta);
      const Complex a(0.3, -0.5);
      const FockVector s1 = displaced_squeezed(a, fr, 64);
      const FockVector s2 = displaced_squeezed_stoler(a, fr, 64);
      const CMatrix M = fr.u * ops.ladder_minus.entries + fr.v * ops.ladder_plus.entries;
      EXPECT_LE(interior_residual(M, s1, a), 1e-8) << r << " " << theta;
      EXPECT_LE(interior_residual(M, s2, a), 1e-8) << r << " " << theta;
      EXPECT_GT(fidelity(s1, s2), 1.0 - 1e-10);
    }
}

TEST(DisplacedSqueezed, StrongSqueezingNeedsLargerBasis) {
  const SqueezeFrame fr = SqueezeFrame::from_r(1.0);
  EXPECT_THROW(displaced_squeezed(0.5, fr, 64), Error);
  const OperatorSet ops = build_rep(RepSpec::heisenberg(129));
  const FockVector s = displaced_squeezed(0.5, fr, 128);
  EXPECT_LE(interior_residual(fr.u * ops.ladder_minus.entries + fr.v * ops.ladder_plus.entries, s, 0.5), 1e-8);
}

TEST(SqueezeFrame, RejectsNonUnitDeterminant) { EXPECT_THROW(SqueezeFrame(1.0, 0.5), Error); }

TEST(Wavefunction, VacuumGaussian) {
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(-4.0 + 0.2 * i);
  const auto psi = coordinate_wavefunction(canonical_cs(0.0, 32), grid);
  for (size_t i = 0; i < grid.size(); ++i)
    EXPECT_NEAR(std::abs(psi[i] - std::pow(M_PI, -0.25) * std::exp(-grid[i] * grid[i] / 2)), 0.0, 1e-14);
}

TEST(Wavefunction, SqueezedClosedFormAndNormalization) {
  const Complex a = 0.5, u = std::cosh(0.3), v = std::sinh(0.3);
  const FockVector s = displaced_squeezed(a, SqueezeFrame(u, v), 64);
  std::vector<double> grid;
  const int n = 2000;
  for (int i = 0; i < n; ++i) grid.push_back(-10.0 + 20.0 * i / (n - 1));
  const auto series = coordinate_wavefunction(s, grid);
  const auto closed = squeezed_wavefunction(a, u, v, grid);
  // Compare up to a global phase.
  Complex ov = 0.0;
  for (int i = 0; i < n; ++i) ov += std::conj(closed[i]) * series[i];
  const Complex ph = ov / std::abs(ov);
  double l2 = 0.0, nrm = 0.0;
  const double h = grid[1] - grid[0];
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
    l2 += w * std::norm(series[i] - ph * closed[i]);
    nrm += w * std::norm(closed[i]);
  }
  EXPECT_LE(std::sqrt(l2), 1e-6);
  EXPECT_NEAR(nrm, 1.0, 1e-6);
}

TEST(SpinCS, LowestWeightAtZero) {
  const FockVector s = spin_cs(0.0, 1.5);
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, 1e-15);
}

TEST(SpinCS, SpinHalfAmplitudes) {
  const Complex tau(0.7, -1.2);
  const FockVector s = spin_cs(tau, 0.5);
  const double nrm = std::sqrt(1 + std::norm(tau));
  EXPECT_NEAR(std::abs(s[0] - 1.0 / nrm), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - tau / nrm), 0.0, 1e-15);
}

TEST(SpinCS, BinomialAmplitudesAndCartanMean) {
  const OperatorSet ops = build_rep(RepSpec::su2(2.0));
  for (Complex tau : {Complex(1.0), Complex(0.3, 0.4), Complex(-2.0, 0.5)}) {
    const FockVector s = spin_cs(tau, 2.0);
    for (int n = 0; n <= 4; ++n) {
      const Complex oracle = std::sqrt(binom(4, n)) * std::pow(tau, n) / std::pow(1 + std::norm(tau), 2.0);
      EXPECT_NEAR(std::abs(s[n] - oracle), 0.0, 1e-14);
    }
    const double j3 = expectation_value(ops.cartan, s).real();
    EXPECT_NEAR(j3, -2.0 * (1 - std::norm(tau)) / (1 + std::norm(tau)), 1e-14);
  }
}

TEST(SpinCS, AnglesMatchTau) {
  const double th = 1.1, ph = 0.4;
  EXPECT_GT(fidelity(spin_cs_angles(th, ph, 1.0), spin_cs(std::polar(std::tan(th / 2), -ph), 1.0)), 1 - 1e-15);
}

TEST(Su11CS, LowestWeightMoments) {
  for (double k : {0.5, 1.0, 2.0}) {
    const OperatorSet ops = build_rep(RepSpec::su11(k, 66));
    const MomentSet ms = pair_moments(su11_cs(0.0, k, 64), ops);
    EXPECT_NEAR(std::sqrt(ms.sigma(0, 0)), std::sqrt(k / 2), 1e-14);
    EXPECT_NEAR(std::sqrt(ms.sigma(1, 1)), std::sqrt(k / 2), 1e-14);
  }
}

TEST(Su11CS, AmplitudesFromGroupAction) {
  // exp(xi K+) acting on the lowest weight, computed with Eigen's matrix exponential.
  const double k = 1.5;
  const Complex xi(0.3, -0.25);
  const int d = 120;
  const OperatorSet ops = build_rep(RepSpec::su11(k, d));
  CVector low = CVector::Zero(d);
  low[0] = 1.0;
  const CMatrix kp = xi * ops.ladder_plus.entries;
  const CVector c = (kp.exp() * low).normalized();
  const FockVector s = su11_cs(xi, k, d);
  EXPECT_GT(std::norm(c.dot(s.coeffs())), 1.0 - 1e-13);
}

TEST(Su11CS, SchrodingerEqualityAndHeisenbergOffAxis) {
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, 202));
  EXPECT_LE(std::abs(schrodinger_slack(pair_moments(su11_cs(0.3, 1.0, 200), ops))), 1e-10);
  const MomentSet off = pair_moments(su11_cs({0.3, 0.2}, 1.0, 200), ops);
  EXPECT_LE(std::abs(schrodinger_slack(off)), 1e-10);
  EXPECT_GT(heisenberg_slack(off), 1e-3);
}

TEST(Su11CS, RejectsOutsideDisk) {
  try {
    su11_cs(1.0, 1.0, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfDisk);
  }
}

TEST(BarutGirardello, KernelAndAmplitudeRatio) {
  EXPECT_NEAR(std::abs(bg_cs(0.0, 1.0, 32)[0] - 1.0), 0.0, 1e-15);
  const Complex z(0.8, 0.6);
  const double k = 0.75;
  const FockVector s = bg_cs(z, k, 64);
  for (int n = 0; n < 15; ++n) EXPECT_NEAR(std::abs(s[n + 1] / s[n] - z / std::sqrt((n + 1) * (2 * k + n))), 0.0, 1e-13);
}

TEST(BarutGirardello, HeisenbergEqualityOnRealAxis) {
  const OperatorSet ops = build_rep(RepSpec::su11(0.5, 66));
  const FockVector s = bg_cs(1.0, 0.5, 64);
  const MomentSet ms = moments(s, {ops.hermitian_x1, ops.hermitian_x2, ops.cartan});
  EXPECT_NEAR(ms.sigma(0, 0) * ms.sigma(1, 1), 0.25 * std::pow(ms.means[2], 2), 1e-12);
}

TEST(QCS, ClassicalLimitIsBitwiseCanonical) {
  const Complex a(0.6, 0.2);
  const FockVector q = q_cs(a, 1.0, 48), c = canonical_cs(a, 48);
  for (int n = 0; n < 48; ++n) EXPECT_EQ(q[n], c[n]);
  EXPECT_NEAR(std::abs(q_cs(0.0, 0.8, 16)[0] - 1.0), 0.0, 1e-15);
}

TEST(QCS, EigenvectorOfDeformedLowering) {
  const OperatorSet ops = build_rep(RepSpec::qboson(0.8, 65));
  EXPECT_LE(residual(ops.ladder_minus.entries, q_cs(1.0, 0.8, 64), 1.0), 1e-9);
}

TEST(LadderOus, Su11EigenstateSaturatesSchrodinger) {
  const int dim = 200;
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, dim + 2));
  OUSParams p;
  p.u = 2.0;
  p.v = 1.0;
  p.z = 0.0;
  const FockVector s = ladder_ous(ops, p, dim);
  EXPECT_LE(residual((p.u * ops.ladder_minus.entries + p.v * ops.ladder_plus.entries).topLeftCorner(dim + 1, dim + 1), s, p.z),
            1e-9);
  EXPECT_LE(std::abs(schrodinger_slack(pair_moments(s, ops))), 1e-8);
}

TEST(LadderOus, ReducesToBarutGirardello) {
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, 66));
  OUSParams p;
  p.u = 1.0;
  p.v = 0.0;
  p.z = Complex(0.7, 0.3);
  EXPECT_GT(fidelity(ladder_ous(ops, p, 64), bg_cs(p.z, 1.0, 64)), 1.0 - 1e-14);
}

TEST(LadderOus, SqueezingGrowsAsVApproachesU) {
  const OperatorSet ops = build_rep(RepSpec::heisenberg(202));
  double prev = 1e300;
  for (double v : {0.0, 0.2, 0.4, 0.6, 0.8}) {
    OUSParams p;
    p.u = 1.0;
    p.v = v;
    p.z = 0.3;
    const double var = pair_moments(ladder_ous(ops, p, 200), ops).sigma(0, 0);
    EXPECT_LT(var, prev);
    prev = var;
  }
}

TEST(LadderOus, NonNormalizableWhenVDominates) {
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, 66));
  OUSParams p;
  p.u = 0.5;
  p.v = 1.0;
  try {
    ladder_ous(ops, p, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonNormalizable);
  }
}

TEST(LadderOus, SpinRequiresEigenvalue) {
  const OperatorSet ops = build_rep(RepSpec::su2(1.0));
  OUSParams p;
  p.u = 1.0;
  p.v = 0.5;
  p.z = 0.123;
  EXPECT_THROW(ladder_ous(ops, p, 3), Error);
  p.z = std::sqrt(2.0);  // eigenvalues of J- + 0.5 J+ are 0, +-sqrt(2)
  const FockVector s = ladder_ous(ops, p, 3);
  EXPECT_LE(residual(p.u * ops.ladder_minus.entries + p.v * ops.ladder_plus.entries, s, p.z), 1e-10);
}

TEST(DeformedCoefficients, VZeroMonomials) {
  const double q = 1.4, k = 0.75;
  const Complex z(0.5, 0.2);
  const auto g = suq11_ous_coeffs(z, 1.0, 0.0, q, k, 12);
  for (int n = 0; n <= 12; ++n) {
    double den = 1.0;
    for (int m = 1; m <= n; ++m) den *= q_bracket(m, q) * q_bracket(2 * k + m - 1, q);
    EXPECT_NEAR(std::abs(g[n] - std::pow(z, n) / std::sqrt(den)), 0.0, 1e-14);
  }
}

TEST(DeformedCoefficients, ZeroEigenvalueParity) {
  const auto g = suq11_ous_coeffs(0.0, 1.0, 0.4, 0.6, 1.0, 20);
  for (int n = 1; n <= 20; n += 2) EXPECT_EQ(std::abs(g[n]), 0.0);
}

TEST(DeformedCoefficients, SecondCoefficientThreeWays) {
  const Complex u(1.2, 0.1), v(0.3, -0.2);
  const Complex oracle = -(v / u) / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(suq11_ous_coeffs(0.0, u, v, 1.0, 1.0, 4)[2] - oracle), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(suq11_ous_coeffs_z0(u, v, 1.0, 1.0, 4)[2] - oracle), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(su11_ous_coeffs_hypergeometric(0.0, u, v, 1.0, 4)[2] - oracle), 0.0, 1e-15);
}

TEST(DeformedOus, EigenResidual) {
  const double q = 2.0, k = 1.0;
  const Complex u = 1.0, v(0.05, 0.05), z(0.4, -0.3);
  const OperatorSet ops = build_rep(RepSpec::suq11(k, q, 49));
  const FockVector s = suq11_ous(z, u, v, q, k, 48);
  EXPECT_LE(residual(u * ops.ladder_minus.entries + v * ops.ladder_plus.entries, s, z), 1e-9);
}

TEST(AnalyticOus, ConditionAGivesCoherentState) {
  const double k = 1.0;
  const Complex u1 = 1.0, v1 = -0.25;
  const AnalyticOus sol = su11_analytic_ous(-1.0, u1, v1, k, 200);
  EXPECT_EQ(sol.cs_branch, 1);
  EXPECT_NEAR(std::abs(sol.xi - Complex(-0.5)), 0.0, 1e-15);
  EXPECT_GT(fidelity(sol.state, su11_cs(-0.5, k, 200)), 1.0 - 1e-8);
}

TEST(AnalyticOus, GenericEigenvalueIsNotCoherent) {
  const AnalyticOus sol = su11_analytic_ous(0.5, 1.0, -0.25, 1.0, 200);
  EXPECT_EQ(sol.cs_branch, 0);
  double best = 0.0;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const Complex xi(-0.9 + 0.045 * i, -0.9 + 0.045 * j);
      if (std::abs(xi) < 0.9) best = std::max(best, fidelity(sol.state, su11_cs(xi, 1.0, 200)));
    }
  EXPECT_LT(best, 1.0 - 1e-6);
}

TEST(AnalyticOus, AgreesWithTruncatedEigenproblem) {
  const int dim = 200;
  const OperatorSet ops = build_rep(RepSpec::su11(1.0, dim + 2));
  for (Complex z1 : {Complex(0.5), Complex(-0.3, 0.7)}) {
    const Complex u1(1.2, 0.6), v1(-0.15, 0.15);
    OUSParams p;
    p.u = u1;
    p.v = v1;
    p.z = z1;
    EXPECT_GT(fidelity(su11_analytic_ous(z1, u1, v1, 1.0, dim).state, ladder_ous(ops, p, dim)), 1.0 - 1e-8);
  }
}

TEST(AnalyticOus, SecondSolutionLivesInComplementaryRep) {
  const AnalyticOus sol = su11_analytic_ous_second(0.2, 1.0, -0.1, 0.25, 100);
  EXPECT_DOUBLE_EQ(sol.state.label().k, 0.75);
  EXPECT_THROW(su11_analytic_ous_second(0.2, 1.0, -0.1, 0.75, 100), Error);
}

TEST(Multimode, NoMixingGivesProductOfCoherentStates) {
  const int d = 12;
  const Complex a1(0.3, 0.1), a2(-0.2, 0.0);
  const FockVector s = multimode_ss({a1, a2}, CMatrix::Identity(2, 2), CMatrix::Zero(2, 2), d);
  const FockVector c1 = canonical_cs(a1, d), c2 = canonical_cs(a2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) EXPECT_NEAR(std::abs(s[i * d + j] - c1[i] * c2[j]), 0.0, 1e-12);
}

TEST(Multimode, TwoModeSqueezedVacuum) {
  const int d = 20, dp = d + 1;
  const double r = 0.4;
  const CMatrix U = std::cosh(r) * CMatrix::Identity(2, 2);
  CMatrix V(2, 2);
  V << 0.0, std::sinh(r), std::sinh(r), 0.0;
  const FockVector s = tensor_padded(multimode_ss({0.0, 0.0}, U, V, d), dp);
  const CMatrix a1 = mode_lowering(dp, 2, 0), a2 = mode_lowering(dp, 2, 1);
  const CMatrix A1 = U(0, 0) * a1 + V(0, 1) * a2.adjoint(), A2 = U(1, 1) * a2 + V(1, 0) * a1.adjoint();
  EXPECT_LE((A1 * s.coeffs()).norm(), 1e-7);
  EXPECT_LE((A2 * s.coeffs()).norm(), 1e-7);
  // Schmidt coefficients of the two-mode squeezed vacuum: tanh(r)^n / cosh(r).
  for (int n = 0; n < 8; ++n) EXPECT_NEAR(std::abs(s[n * dp + n]), std::pow(std::tanh(r), n) / std::cosh(r), 1e-9);
}

TEST(Multimode, RejectsNonBogoliubovPair) {
  try {
    multimode_ss({0.0, 0.0}, CMatrix::Identity(2, 2), 0.5 * CMatrix::Identity(2, 2), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidBogoliubov);
  }
}

TEST(SpinResolution, QuadratureReproducesIdentity) {
  EXPECT_LE(su2_resolution_check(0.5, 8), 1e-12);
  EXPECT_LE(su2_resolution_check(2.0, 16), 1e-10);
}
