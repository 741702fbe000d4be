#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "uncstates/ous.hpp"
#include "uncstates/uncertainty.hpp"

namespace uncstates {

/// Grid over (u1, v1, z1) with z1 = -2k u1 s + delta, s = sqrt(-v1/u1) principal.
struct AppendixBGrid {
  std::vector<Complex> u1;
  std::vector<Complex> v1;
  std::vector<Complex> delta;
  int dim = 200;

  static AppendixBGrid standard() {
    return {{1.0, 1.5, 2.0, {1.2, 0.6}, {-1.0, 0.8}},
            {-0.25, 0.2, {0.0, 0.3}, {-0.15, 0.15}, {0.1, -0.3}},
            {-1.0, -0.5, 0.0, {0.0, 0.5}, 1.0},
            200};
  }
};

struct AppendixBPoint {
  Complex u1, v1, z1;
  Complex s;
  int cs_branch = 0;  // +1 xi = -s, -1 xi = +s, 0 none
  double slack2 = 0.0;
  double slack3 = 0.0;
  double scale = 1.0;
  bool equal = false;
  double fidelity = std::numeric_limits<double>::quiet_NaN();
};

struct AppendixBReport {
  double k = 1.0;
  double tolerance = kEqualityTol;
  double margin = kMarginFactor;
  std::vector<AppendixBPoint> points;
  int on_manifold = 0;
  int off_manifold = 0;
  double max_on_slack = 0.0;
  double min_off_relative_slack = std::numeric_limits<double>::infinity();
  double min_fidelity = 1.0;
  bool unique = false;
};

inline AppendixBReport appendix_b_scan(double k, const AppendixBGrid& grid, double tolerance = kEqualityTol,
                                       double margin = kMarginFactor) {
  AppendixBReport rep;
  rep.k = k;
  rep.tolerance = tolerance;
  rep.margin = margin;
  const OperatorSet ops = build_rep(RepSpec::su11(k, grid.dim + 2));
  const std::vector<OperatorMatrix> tuple = {ops.hermitian_x1, ops.hermitian_x2, ops.cartan};
  bool ok = true;
  for (Complex u1 : grid.u1)
    for (Complex v1 : grid.v1) {
      require(std::abs(u1) > std::abs(v1), ErrorKind::NonNormalizable, "grid needs |u1| > |v1|");
      const Complex s = csqrt(-v1 / u1);
      for (Complex d : grid.delta) {
        AppendixBPoint pt;
        pt.u1 = u1;
        pt.v1 = v1;
        pt.z1 = -2.0 * k * u1 * s + d;
        const AnalyticOus sol = su11_analytic_ous(pt.z1, u1, v1, k, grid.dim);
        pt.s = sol.s;
        pt.cs_branch = sol.cs_branch;
        const MomentSet ms = moments(sol.state, tuple);
        pt.slack2 = cur_slack(ms, 2);
        pt.slack3 = cur_slack(ms, 3);
        pt.scale = std::max(1.0, char_coeffs(ms.sigma)[2]);
        pt.equal = std::abs(pt.slack2) <= rep.tolerance * pt.scale;
        if (pt.cs_branch != 0) {
          pt.fidelity = std::norm(inner_product(su11_cs(sol.xi, k, grid.dim), sol.state));
          ++rep.on_manifold;
          rep.max_on_slack = std::max(rep.max_on_slack, std::abs(pt.slack2));
          rep.min_fidelity = std::min(rep.min_fidelity, pt.fidelity);
          ok = ok && pt.equal && pt.fidelity >= 1.0 - 1e-8;
        } else {
          ++rep.off_manifold;
          rep.min_off_relative_slack = std::min(rep.min_off_relative_slack, pt.slack2 / pt.scale);
          ok = ok && pt.slack2 >= rep.margin * pt.scale;
        }
        rep.points.push_back(pt);
      }
    }
  rep.unique = ok;
  return rep;
}

}  // namespace uncstates
