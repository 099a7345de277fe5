#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base parameter fails the admissibility check (wrong 2-adic valuation shape).
struct InvalidEta : Error {
  using Error::Error;
};

// Malformed user-facing input: unparsable values, out-of-range options.
struct InvalidInput : Error {
  using Error::Error;
};

// Argument to a halving-style map was odd where evenness is required.
struct OddArgument : Error {
  using Error::Error;
};

// A windowed value ran out of known low-order bits.
struct PrecisionExhausted : Error {
  using Error::Error;
};

// A machine's data is inconsistent: decomposition not uniquely defined,
// element of the wrong concrete type, bad transversal.
struct MalformedMachine : Error {
  using Error::Error;
};

// Matrix dimensions incompatible with the requested operation.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Two lamp positions collided under a fiber map that must stay injective.
struct FiberViolation : Error {
  using Error::Error;
};

// Construction requires a base machine whose index subgroup meets every
// point stabilizer trivially.
struct ParabolicRequired : Error {
  using Error::Error;
};

}  // namespace selfsim
