#pragma once

#include <stdexcept>
#include <string>

namespace ratcurve {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  DivisionByZero,
  FieldMismatch,
  PrecisionExhausted,
  ZeroDenominator,
  DegenerateTriple,
  NotRationalCoefficients,
  FixedFieldNotRational,
  CurveMismatch,
  PointNotOnCurve,
  NotTorsion,
  DualVerificationFailed,
  NotRationalCurve,
  NoLinearFactor,
  DegenerateQuotient,
  RealnessFailed,
  NonRealMoebius,
  InsufficientPoints,
  PoleAtSample,
  TooFewSamples,
  CapExceeded,
  NotTransitive,
  DegreeEven,
  InvalidSigma,
  NotRootOfUnity,
  BadRho,
  MissingI,
  HypothesisViolated,
  IoError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ratcurve
