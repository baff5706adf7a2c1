#pragma once

#include <stdexcept>
#include <string>

namespace mnl {

/// Malformed or inconsistent input: bad JSON, dimension mismatch, unknown
/// catalog name, antisymmetry conflict. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a value that does not satisfy its stated
/// precondition (e.g. regular_birep on a non-Moufang table). Distinct from a
/// failed check: a check reports, a precondition throws.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace mnl
