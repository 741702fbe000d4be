#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "uncstates/expm.hpp"
#include "uncstates/states.hpp"

namespace uncstates {

struct FrequencyProfile {
  enum Kind { Constant, SuddenJump, SmoothRamp } kind = Constant;
  double omega0 = 1.0;
  double omega1 = 1.0;
  double t_switch = 0.0;  // jump time or ramp duration

  static FrequencyProfile constant(double w) { return {Constant, w, w, 0.0}; }
  static FrequencyProfile sudden_jump(double w0, double w1, double tj) { return {SuddenJump, w0, w1, tj}; }
  static FrequencyProfile smooth_ramp(double w0, double w1, double tr) { return {SmoothRamp, w0, w1, tr}; }

  double omega(double t) const {
    switch (kind) {
      case Constant: return omega0;
      case SuddenJump: return t < t_switch ? omega0 : omega1;
      case SmoothRamp: {
        const double x = std::clamp(t / t_switch, 0.0, 1.0);
        return omega0 + (omega1 - omega0) * x * x * x * (10.0 - 15.0 * x + 6.0 * x * x);
      }
    }
    return omega0;
  }

  double max_omega() const { return std::max(omega0, omega1); }

  void validate() const {
    require(omega0 > 0.0 && omega1 > 0.0, ErrorKind::UsageError, "frequencies must be positive");
    if (kind == SmoothRamp) require(t_switch > 0.0, ErrorKind::UsageError, "ramp duration must be positive");
  }
};

namespace detail {

struct Substep {
  double t0;
  double h;
  std::optional<double> omega;  // fixed frequency on a jump segment
  bool sample_after;
};

// Uniform grid of full steps; a step straddling a jump is split at the jump.
inline std::vector<Substep> substeps(const FrequencyProfile& prof, double t_end, double dt) {
  require(dt > 0.0 && t_end >= 0.0, ErrorKind::StepTooLarge, "need dt > 0 and t_end >= 0");
  require(dt * prof.max_omega() <= 1.0, ErrorKind::StepTooLarge, "dt * omega exceeds 1");
  const long n = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  std::vector<Substep> out;
  for (long i = 0; i < n; ++i) {
    const double t0 = i * dt, t1 = std::min(t_end, (i + 1) * dt);
    if (prof.kind == FrequencyProfile::SuddenJump) {
      const double tj = prof.t_switch;
      if (tj > t0 && tj < t1) {
        out.push_back({t0, tj - t0, prof.omega0, false});
        out.push_back({tj, t1 - tj, prof.omega1, true});
      } else {
        out.push_back({t0, t1 - t0, t1 <= tj ? prof.omega0 : prof.omega1, true});
      }
    } else {
      out.push_back({t0, t1 - t0, std::nullopt, true});
    }
  }
  return out;
}

}  // namespace detail

struct EpsTrajectory {
  std::vector<double> times;
  std::vector<Complex> eps;
  std::vector<Complex> deps;
  std::vector<double> wronskian_drift;
};

/// RK4 for eps'' + omega(t)^2 eps = 0; records |eps* eps' - eps eps'* - 2i|.
inline EpsTrajectory integrate_eps(const FrequencyProfile& prof, Complex eps0, Complex deps0, double t_end, double dt) {
  prof.validate();
  const auto wr = [](Complex e, Complex de) { return std::abs(std::conj(e) * de - e * std::conj(de) - 2.0 * I); };
  require(wr(eps0, deps0) <= 1e-12, ErrorKind::WronskianViolation, "initial data must have Wronskian 2i");
  EpsTrajectory tr;
  tr.times.push_back(0.0);
  tr.eps.push_back(eps0);
  tr.deps.push_back(deps0);
  tr.wronskian_drift.push_back(wr(eps0, deps0));
  Complex e = eps0, de = deps0;
  for (const auto& st : detail::substeps(prof, t_end, dt)) {
    const auto w2 = [&](double t) {
      const double w = st.omega ? *st.omega : prof.omega(t);
      return w * w;
    };
    const double h = st.h, t = st.t0;
    const Complex k1e = de, k1d = -w2(t) * e;
    const Complex k2e = de + 0.5 * h * k1d, k2d = -w2(t + 0.5 * h) * (e + 0.5 * h * k1e);
    const Complex k3e = de + 0.5 * h * k2d, k3d = -w2(t + 0.5 * h) * (e + 0.5 * h * k2e);
    const Complex k4e = de + h * k3d, k4d = -w2(t + h) * (e + h * k3e);
    e += h / 6.0 * (k1e + 2.0 * k2e + 2.0 * k3e + k4e);
    de += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    if (st.sample_after) {
      tr.times.push_back(t + h);
      tr.eps.push_back(e);
      tr.deps.push_back(de);
      tr.wronskian_drift.push_back(wr(e, de));
    }
  }
  return tr;
}

struct UVSample {
  Complex u, v;
};

/// u = (eps sqrt(w) - i eps'/sqrt(w))/2, v = -(eps sqrt(w) + i eps'/sqrt(w))/2.
inline std::vector<UVSample> uv_from_eps(const EpsTrajectory& tr, double omega_ref) {
  const double sw = std::sqrt(omega_ref);
  std::vector<UVSample> out;
  for (size_t i = 0; i < tr.eps.size(); ++i)
    out.push_back({(tr.eps[i] * sw - I * tr.deps[i] / sw) / 2.0, -(tr.eps[i] * sw + I * tr.deps[i] / sw) / 2.0});
  return out;
}

/// Midpoint exponential propagation under H = (p^2 + omega(t)^2 q^2)/2 in the basis of frequency omega_basis.
inline std::vector<FockVector> propagate_state(const FockVector& psi0, const FrequencyProfile& prof, double t_end,
                                               double dt, double omega_basis = 1.0) {
  prof.validate();
  require(psi0.label().kind == Algebra::Heisenberg && psi0.label().modes == 1, ErrorKind::DimensionMismatch,
          "propagation needs a single oscillator mode");
  require_physical(psi0);
  const int d = psi0.dim();
  const OperatorSet ops = build_rep(RepSpec::heisenberg(d));
  const CMatrix& a = ops.ladder_minus.entries;
  const CMatrix& ad = ops.ladder_plus.entries;
  const CMatrix sq = a * a + ad * ad;
  const CMatrix num2 = (2.0 * ops.cartan.entries + CMatrix::Identity(d, d));
  const CMatrix q2 = (sq + num2) / (2.0 * omega_basis);
  const CMatrix p2 = -omega_basis * (sq - num2) / 2.0;
  std::vector<FockVector> out{psi0};
  CVector psi = psi0.coeffs();
  for (const auto& st : detail::substeps(prof, t_end, dt)) {
    const double w = st.omega ? *st.omega : prof.omega(st.t0 + 0.5 * st.h);
    const CMatrix H = (p2 + w * w * q2) / 2.0;
    psi = expm(-I * st.h * H) * psi;
    if (st.sample_after) {
      FockVector s(psi0.label(), psi);
      require_physical(s);
      out.push_back(s);
    }
  }
  return out;
}

/// || (u a + v a^+ - alpha) psi ||, with a one level larger than the state.
inline double invariant_residual(const FockVector& psi, Complex u, Complex v, Complex alpha) {
  const OperatorSet ops = build_rep(RepSpec::heisenberg(psi.dim() + 1));
  const CVector c = detail::padded_vec(psi.coeffs(), psi.dim() + 1);
  return (u * (ops.ladder_minus.entries * c) + v * (ops.ladder_plus.entries * c) - alpha * c).norm();
}

struct DynamicsRun {
  EpsTrajectory eps;
  std::vector<UVSample> uv;
  std::vector<double> residual;
  std::vector<double> fidelity;
};

/// CS initial data at omega0, classical and quantum evolution side by side.
inline DynamicsRun run_dynamics(const FrequencyProfile& prof, Complex alpha, double t_end, double dt, int dim) {
  const double w0 = prof.omega0;
  DynamicsRun run;
  run.eps = integrate_eps(prof, 1.0 / std::sqrt(w0), I * std::sqrt(w0), t_end, dt);
  run.uv = uv_from_eps(run.eps, w0);
  const auto states = propagate_state(canonical_cs(alpha, dim), prof, t_end, dt, w0);
  for (size_t i = 0; i < states.size(); ++i) {
    const UVSample& s = run.uv[i];
    run.residual.push_back(invariant_residual(states[i], s.u, s.v, alpha));
    const double nrm = std::sqrt(std::norm(s.u) - std::norm(s.v));
    const SqueezeFrame frame(s.u / nrm, s.v / nrm);
    const FockVector target = displaced_squeezed(alpha * 1.0 / nrm, frame, dim);
    run.fidelity.push_back(std::norm(inner_product(target, states[i])));
  }
  return run;
}

}  // namespace uncstates
