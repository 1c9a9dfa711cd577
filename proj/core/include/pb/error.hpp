#pragma once

#include <stdexcept>
#include <string>

namespace pb {

enum class Errc {
  NotPrime,
  NotPrimePower,
  Overflow,
  DivisionByZero,
  FieldMismatch,
  NotADivisor,
  BadExponents,
  ZeroCoefficient,
  ExponentOutOfRange,
  PreconditionFailed,
  TheoremViolation,
  InvalidCertificate,
  SieveBudgetExceeded,
  DomainError,
  IoError,
};

/// All library failures surface as Error; code() tells callers which
/// contract was broken without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace pb
