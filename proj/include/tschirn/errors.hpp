#pragma once

#include <stdexcept>
#include <string>

namespace tschirn {

// Internal invariant failure: a postcondition this library checks on its own
// output did not hold.  Callers map this to a "tool error" exit.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Input fails a mathematical precondition (singular curve, reducible cover,
// degenerate configuration...).  Carries a machine-readable reason plus an
// optional witness (e.g. the base locus of a singular fiber).
struct InvalidInstance : std::runtime_error {
  std::string reason;
  std::string witness;

  InvalidInstance(std::string reason_, std::string witness_ = "")
      : std::runtime_error(witness_.empty() ? reason_ : reason_ + " [witness: " + witness_ + "]"),
        reason(std::move(reason_)),
        witness(std::move(witness_)) {}
};

}  // namespace tschirn
