#ifndef EKR_ERROR_HPP
#define EKR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ekr {

/// Malformed input text: spec strings, element encodings, design files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on arguments was violated (rank out of range, family mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact check failed on otherwise well-formed input, e.g. a declared
/// design strength that does not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured case budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ekr

#endif  // EKR_ERROR_HPP
