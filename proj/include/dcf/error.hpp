#pragma once

#include <stdexcept>
#include <string>

namespace dcf {

enum class ErrorKind {
  Domain,
  ZeroDivision,
  ZeroPolynomial,
  Reducible,
  NotMonic,
  CapExceeded,
  NotNormal,
  NotSeparable,
  NotAutomorphism,
  NotSubgroup,
  NotAGroup,
  BudgetExceeded,
  NoExtension,
  Parse,
  Unsupported,
  Internal,
};

// Every failure raised by the library. The message names the violated
// precondition; the kind lets callers (the CLI in particular) classify it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dcf
