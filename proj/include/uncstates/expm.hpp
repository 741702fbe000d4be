#pragma once

#include <algorithm>
#include <cmath>

#include "uncstates/core.hpp"

namespace uncstates {

/// Matrix exponential by scaling and squaring with the [13/13] Pade approximant.
inline CMatrix expm(const CMatrix& A) {
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;
  const Eigen::Index n = A.rows();
  const double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > theta13) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / theta13))));
  const CMatrix X = A / std::ldexp(1.0, s);
  const CMatrix Id = CMatrix::Identity(n, n);
  const CMatrix X2 = X * X, X4 = X2 * X2, X6 = X4 * X2;
  const CMatrix U = X * (X6 * (b[13] * X6 + b[11] * X4 + b[9] * X2) + b[7] * X6 + b[5] * X4 +
                         b[3] * X2 + b[1] * Id);
  const CMatrix V = X6 * (b[12] * X6 + b[10] * X4 + b[8] * X2) + b[6] * X6 + b[4] * X4 +
                    b[2] * X2 + b[0] * Id;
  CMatrix R = (V - U).partialPivLu().solve(V + U);
  for (int i = 0; i < s; ++i) R = R * R;
  return R;
}

/// Exact exponential of a nilpotent matrix: finite sum of powers.
inline CMatrix expm_nilpotent(const CMatrix& A) {
  const Eigen::Index n = A.rows();
  CMatrix result = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    term = term * A / static_cast<double>(k);
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
    result += term;
  }
  return result;
}

}  // namespace uncstates
