#ifndef FANOTK_ERRORS_HPP
#define FANOTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanotk {

// Invalid user-supplied parameters (CLI exit code 2).
struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request outside the regime a computation is defined for (CLI exit code 3).
struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Projected work above a configured cap (CLI exit code 4).
struct CapError : std::runtime_error {
  CapError(const std::string& msg, std::string projected_size)
      : std::runtime_error(msg), projected(std::move(projected_size)) {}
  std::string projected;
};

// Certificate verification mismatch or malformed certificate (CLI exit code 5).
struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undefined arithmetic (e.g. inverse of zero).
struct MathError : std::domain_error {
  using std::domain_error::domain_error;
};

// Internal cross-check failure; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fanotk

#endif
