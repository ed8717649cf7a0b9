#pragma once

#include <stdexcept>
#include <string>

namespace entrec {

// Every failure mode of the library carries one of these kinds so callers
// (notably the CLI) can map errors to exit codes without string matching.
enum class ErrorKind {
  ParseError,
  NegativeCoefficient,
  DimensionMismatch,
  NotNormalized,
  SumMismatch,
  IndexOutOfRange,
  ZeroState,
  InvalidState,
  NotMajorized,
  NotStrict,
  BadPartition,
  NoEqualityStructure,
  ConstructionFailed,
  WitnessSearchFailed,
  EpsilonOutOfRange,
  BadPair,
  PreconditionViolated,
  BadParameters,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "parse_error";
    case ErrorKind::NegativeCoefficient: return "negative_coefficient";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::NotNormalized: return "not_normalized";
    case ErrorKind::SumMismatch: return "sum_mismatch";
    case ErrorKind::IndexOutOfRange: return "index_out_of_range";
    case ErrorKind::ZeroState: return "zero_state";
    case ErrorKind::InvalidState: return "invalid_state";
    case ErrorKind::NotMajorized: return "not_majorized";
    case ErrorKind::NotStrict: return "not_strict";
    case ErrorKind::BadPartition: return "bad_partition";
    case ErrorKind::NoEqualityStructure: return "no_equality_structure";
    case ErrorKind::ConstructionFailed: return "construction_failed";
    case ErrorKind::WitnessSearchFailed: return "witness_search_failed";
    case ErrorKind::EpsilonOutOfRange: return "epsilon_out_of_range";
    case ErrorKind::BadPair: return "bad_pair";
    case ErrorKind::PreconditionViolated: return "precondition_violated";
    case ErrorKind::BadParameters: return "bad_parameters";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // WitnessSearchFailed signals a contradiction between a decision procedure
  // and its own witness constructor; everything else is a caller error.
  bool internal() const { return kind_ == ErrorKind::WitnessSearchFailed; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace entrec
