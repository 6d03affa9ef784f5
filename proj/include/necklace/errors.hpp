#pragma once

#include <stdexcept>
#include <string>

namespace necklace {

/// Malformed arguments: bad digits, mismatched carriers, non-prime moduli.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A guardrail (degree cap or work cap) refused the computation.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The operation is undefined for this argument, e.g. a balanced
/// coefficient of a number that has no balanced expansion.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Two independent computations that must agree did not.
class VerificationError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace necklace
