#pragma once

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "uncstates/core.hpp"

namespace uncstates {

using WideReal = boost::multiprecision::cpp_bin_float_100;
using WideComplex = boost::multiprecision::cpp_complex_100;

inline WideComplex widen(Complex z) { return WideComplex(WideReal(z.real()), WideReal(z.imag())); }
inline Complex narrow(const WideComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// [x]_q = (q^x - q^-x)/(q - q^-1), with [x]_1 = x.
inline double q_bracket(double x, double q) {
  if (q == 1.0) return x;
  const double h = std::log(q);
  return std::sinh(x * h) / std::sinh(h);
}

inline double q_factorial(int n, double q) {
  double p = 1.0;
  for (int m = 2; m <= n; ++m) p *= q_bracket(m, q);
  return p;
}

/// [n][n-2]...; empty product (n <= 0) is 1.
inline double q_double_factorial(int n, double q) {
  double p = 1.0;
  for (int m = n; m > 0; m -= 2) p *= q_bracket(m, q);
  return p;
}

/// ((x))_{2n} = [x][x+2]...[x+2n-2].
inline double q_shifted_product(double x, int two_n, double q) {
  double p = 1.0;
  for (int m = 0; m < two_n / 2; ++m) p *= q_bracket(x + 2 * m, q);
  return p;
}

/// [x][x+1]...[x+n-1].
inline double q_pochhammer(double x, int n, double q) {
  double p = 1.0;
  for (int m = 0; m < n; ++m) p *= q_bracket(x + m, q);
  return p;
}

inline double pochhammer(double x, int n) {
  double p = 1.0;
  for (int m = 0; m < n; ++m) p *= x + m;
  return p;
}

enum class HypKind { OneF1, TwoF1 };

namespace detail {

// Index at which a nonpositive-integer parameter zeroes the series, or -1.
inline long terminating_index(Complex a) {
  if (std::abs(a.imag()) > 1e-12) return -1;
  const double r = std::round(a.real());
  if (r > 0.0 || std::abs(a.real() - r) > 1e-12) return -1;
  return static_cast<long>(-r);
}

}  // namespace detail

/// Generalized hypergeometric series 1F1(a;c;x) or 2F1(a,b;c;x).
/// Terminating series are summed exactly in 100-digit arithmetic.
inline Complex hyp_series(HypKind kind, Complex a, Complex b, Complex c, Complex x) {
  long stop = detail::terminating_index(a);
  if (kind == HypKind::TwoF1) {
    const long sb = detail::terminating_index(b);
    if (sb >= 0 && (stop < 0 || sb < stop)) stop = sb;
  }
  const long pole = detail::terminating_index(c);
  if (pole >= 0 && (stop < 0 || pole < stop))
    fail(ErrorKind::PoleAtC, "c is a nonpositive integer reached before termination");

  if (stop >= 0) {
    const WideComplex wa = widen(a), wb = widen(b), wc = widen(c), wx = widen(x);
    WideComplex term(1), sum(1);
    for (long i = 0; i < stop; ++i) {
      const WideComplex wi{WideReal(i), WideReal(0)};
      term *= (wa + wi) / (wc + wi) / WideReal(i + 1) * wx;
      if (kind == HypKind::TwoF1) term *= wb + wi;
      sum += term;
    }
    return narrow(sum);
  }

  if (kind == HypKind::TwoF1 && std::abs(x) >= 1.0)
    fail(ErrorKind::DivergentSeries, "2F1 series requires |x| < 1 unless it terminates");

  Complex term{1.0, 0.0}, sum{1.0, 0.0};
  int small = 0;
  for (long i = 0; i < 100000; ++i) {
    const double di = static_cast<double>(i);
    term *= (a + di) / (c + di) / (di + 1.0) * x;
    if (kind == HypKind::TwoF1) term *= b + di;
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  fail(ErrorKind::DivergentSeries, "series did not converge within 1e5 terms");
}

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
inline QuadratureRule gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace uncstates
