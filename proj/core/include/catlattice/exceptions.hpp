#pragma once

#include <stdexcept>

namespace catlattice {

/// Malformed matrix/JSON input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested lattice modulus exceeds the enumeration budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated domain.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A guaranteed internal invariant failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace catlattice
