#pragma once

#include <stdexcept>

namespace grab {

// A caller violated an operation's precondition (disconnected remainder,
// invalid root set, malformed document, ...).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The instance exceeds a hard implementation limit: vertex capacity,
// solver state table, or 64-bit exact arithmetic.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A runtime check that mirrors a proof step failed. Callers must surface
// this, never patch around it: it is falsification evidence for the
// statement under test.
struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grab
