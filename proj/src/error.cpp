#include "ratcurve/error.hpp"

namespace ratcurve {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::NotRationalCoefficients: return "NotRationalCoefficients";
    case ErrorKind::FixedFieldNotRational: return "FixedFieldNotRational";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::DualVerificationFailed: return "DualVerificationFailed";
    case ErrorKind::NotRationalCurve: return "NotRationalCurve";
    case ErrorKind::NoLinearFactor: return "NoLinearFactor";
    case ErrorKind::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorKind::RealnessFailed: return "RealnessFailed";
    case ErrorKind::NonRealMoebius: return "NonRealMoebius";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::PoleAtSample: return "PoleAtSample";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::DegreeEven: return "DegreeEven";
    case ErrorKind::InvalidSigma: return "InvalidSigma";
    case ErrorKind::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorKind::BadRho: return "BadRho";
    case ErrorKind::MissingI: return "MissingI";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ratcurve
