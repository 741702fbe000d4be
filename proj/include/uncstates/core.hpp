#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace uncstates {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Complex I{0.0, 1.0};

// Top-of-basis window used by the truncation guard.
inline constexpr int kGuardWindow = 4;
inline constexpr double kTruncationGuard = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kEqualityTol = 1e-8;
inline constexpr double kMarginFactor = 1e-3;

enum class ErrorKind {
  DimensionMismatch,
  NonPhysicalState,
  DivergentSeries,
  PoleAtC,
  InvalidRepParameter,
  ZeroParameter,
  NonNormalizable,
  NoSolutionInTruncation,
  OutOfDisk,
  InvalidBogoliubov,
  TooLarge,
  SingularTransform,
  DegenerateFrame,
  SingularFrameMatrix,
  EmptyInput,
  SingularSigma,
  ZeroScale,
  ZeroDenominator,
  NonPositiveCoefficient,
  WronskianViolation,
  StepTooLarge,
  ImaginaryExpectation,
  UsageError,
  VerificationFailure,
  SerializationError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPhysicalState: return "NonPhysicalState";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::PoleAtC: return "PoleAtC";
    case ErrorKind::InvalidRepParameter: return "InvalidRepParameter";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::NonNormalizable: return "NonNormalizable";
    case ErrorKind::NoSolutionInTruncation: return "NoSolutionInTruncation";
    case ErrorKind::OutOfDisk: return "OutOfDisk";
    case ErrorKind::InvalidBogoliubov: return "InvalidBogoliubov";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::SingularFrameMatrix: return "SingularFrameMatrix";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SingularSigma: return "SingularSigma";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::WronskianViolation: return "WronskianViolation";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::ImaginaryExpectation: return "ImaginaryExpectation";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SerializationError: return "SerializationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

/// Principal square root, arg in (-pi, pi].
inline Complex csqrt(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return {0.0, std::sqrt(-z.real())};
  return std::sqrt(z);
}

}  // namespace uncstates
