#pragma once

#include <stdexcept>

namespace qess {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A game matrix fails the constrained-family conditions (s=t, r=u, r-t>0),
// or a closed form was requested for an unconstrained game.
struct ConstraintViolation : Error {
  using Error::Error;
};

// NaN or infinite payoff entries.
struct NonFiniteInput : Error {
  using Error::Error;
};

// A parameter lies outside its admissible interval (probabilities, angles).
struct RangeError : Error {
  using Error::Error;
};

// A computed state vector lost its unit norm; signals an internal defect.
struct NormalizationError : Error {
  using Error::Error;
};

// Invalid configuration or operation parameters (grids, step sizes, ...).
struct ParameterError : Error {
  using Error::Error;
};

// A payoff contribution passed to the entropy functional is negative.
struct NegativeContribution : Error {
  using Error::Error;
};

// A gamma sweep was requested over an empty sequence.
struct EmptySweep : Error {
  using Error::Error;
};

}  // namespace qess
