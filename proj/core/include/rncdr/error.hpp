#pragma once

#include <stdexcept>
#include <string>

namespace rncdr {

enum class ErrorKind {
  InvalidInput,
  NotRDK,
  NonNumeric,
  SizeLimit,
  NotCycleTerminal,
  NoConservation,
  DegenerateOperatingPoint,
  NonPositiveV,
  InvalidStep,
  NotBECCS,
  QDifferenceZero,
  UnknownModel,
  UnsupportedPortfolioSize,
  NotConverged,
  StepSizeUnderflow,
  NoEquilibriumFound,
  Unrealizable,
  NotFound,
  Parse,
  Schema,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rncdr
