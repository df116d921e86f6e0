#ifndef GRLIE_ERRORS_HPP
#define GRLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grlie {

/// Input could not be read at all (malformed document, bad literal).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is well-formed but violates a documented precondition
/// (non-abelian group passed to dual_group, grading containment failure, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A property that is guaranteed by a theorem failed to hold.  This never
/// happens on valid input; it indicates corrupted data or broken arithmetic.
/// Carries a witness dump suitable for diagnosis.
class InvariantViolation : public std::runtime_error {
public:
  InvariantViolation(const std::string& what, std::string witness = "")
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const { return witness_; }

private:
  std::string witness_;
};

}  // namespace grlie

#endif
