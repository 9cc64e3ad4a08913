#ifndef ANTICHAIN_ERROR_HPP
#define ANTICHAIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace antichain {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a formula or type (n > 64, r < 2, ...).
struct DomainError : Error {
  using Error::Error;
};

// Duplicate members or members that do not fit the ground set.
struct InvalidFamily : Error {
  using Error::Error;
};

struct MultiplicityDeficit : Error {
  using Error::Error;
};

struct SizeViolation : Error {
  using Error::Error;
};

struct GadgetPreconditionViolated : Error {
  using Error::Error;
};

struct LayoutInfeasible : Error {
  using Error::Error;
};

// Raised when a constructed family fails its own verification. Never expected.
struct ConstructionPostconditionFailed : Error {
  using Error::Error;
};

struct InvalidInstance : Error {
  using Error::Error;
};

struct InstanceTooLarge : Error {
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  int line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  int line_;
  std::string reason_;
};

struct HeaderMismatch : Error {
  using Error::Error;
};

struct IoFailure : Error {
  using Error::Error;
};

}  // namespace antichain

#endif  // ANTICHAIN_ERROR_HPP
