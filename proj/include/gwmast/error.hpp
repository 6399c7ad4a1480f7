#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwmast {

enum class ErrorCode {
  NotProbability,
  NotCritical,
  DegreeOneMass,
  NoExtinctionMass,
  ParseError,
  ConstantTermNonzero,
  EvenArgument,
  DomainError,
  ZeroDenominator,
  ShapeEnumerationTooLarge,
  PeriodicSupport,
  AttemptsExhausted,
  ImpossibleLeafCount,
  UnknownLabel,
  NeedOutsideLeaf,
  SubsetSpaceTooLarge,
  NonBinaryInput,
  BudgetExceeded,
  InvalidTree,
  IoError,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gwmast
