// Error taxonomy shared across the library.
//
// Three families matter to callers (and drive the CLI exit codes):
//   - input/validation problems (syntax errors, curves that are not smooth
//     cubics, non-primary ideals where a primary one is required),
//   - resource-budget exhaustion (degree caps, pair budgets),
//   - everything else, which indicates an internal invariant violation.
#ifndef CHARCLOSE_ERRORS_HPP
#define CHARCLOSE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charclose {

/// Malformed polynomial text. `position` is the 0-based offset of the
/// offending character in the input string.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Base class for rejected inputs that parsed but fail a mathematical
/// precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The given cubic does not define a smooth projective curve over F_p.
class NotEllipticError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The operation requires an ideal primary to the irrelevant maximal ideal.
class NotPrimaryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A generator or element that must be homogeneous is not.
class NonHomogeneousError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A configured budget (total degree, S-pair count, ...) was exhausted.
/// The message states which budget and, where known, what it would take.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace charclose

#endif  // CHARCLOSE_ERRORS_HPP
