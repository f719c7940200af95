#pragma once

#include <stdexcept>
#include <string>

namespace bbwu {

enum class ErrorKind {
  EmptyWeight,
  NotNonIncreasing,
  PadBelowNegative,
  LengthShrink,
  LengthMismatch,
  NotAPartition,
  TooManyParts,
  InvalidSpace,
  BadRange,
  NonIntegralChernDegree,
  InvalidPair,
  InconsistentGrid,
  SearchTooLarge,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bbwu
