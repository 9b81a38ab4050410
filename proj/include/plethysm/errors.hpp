#pragma once

#include <stdexcept>
#include <string>

namespace plethysm {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  ModulusDegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  DoesNotFitRectangle,
  NotColumnStandard,
  EntryOutOfRange,
  SingularMatrix,
  UnsupportedConstructor,
  RankOutOfRange,
  KindMismatch,
  NotAWeightVector,
  NoUniqueHighestWeight,
  ModeMismatch,
  InfiniteEnumeration,
  ParamsOutOfSupportedRange,
  HypothesisNotMet,
  ParseError,
  InvalidArgument,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::ModulusDegreeMismatch: return "ModulusDegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DoesNotFitRectangle: return "DoesNotFitRectangle";
    case ErrorKind::NotColumnStandard: return "NotColumnStandard";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::UnsupportedConstructor: return "UnsupportedConstructor";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::NotAWeightVector: return "NotAWeightVector";
    case ErrorKind::NoUniqueHighestWeight: return "NoUniqueHighestWeight";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::InfiniteEnumeration: return "InfiniteEnumeration";
    case ErrorKind::ParamsOutOfSupportedRange: return "ParamsOutOfSupportedRange";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace plethysm
