#pragma once

#include <stdexcept>
#include <string>

namespace liealg {

/// Malformed input: bad dimensions, unparsable values, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a mathematical precondition
/// (e.g. a non-semisimple algebra where semisimplicity is required).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured search or enumeration cap was exceeded.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liealg
