#pragma once

#include <stdexcept>
#include <string>

namespace cw {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Profile term with an even or too-small harmonic index.
class HarmonicViolation : public Error {
 public:
  using Error::Error;
};

// Profile amplitude reaches or exceeds D/2 somewhere.
class AmplitudeViolation : public Error {
 public:
  AmplitudeViolation(const std::string& msg, double theta, double value)
      : Error(msg), theta(theta), value(value) {}
  double theta;  // angle at which |r| peaks
  double value;  // the offending |r| value
};

// Rotor order n < 3.
class BadOrder : public Error {
 public:
  using Error::Error;
};

// Rotor displacement frequency that is not a positive multiple of n.
class FrequencyViolation : public Error {
 public:
  using Error::Error;
};

// Rotor displacement too large for the constructive smallness guard.
class GuardViolation : public Error {
 public:
  GuardViolation(const std::string& msg, double measured, double bound)
      : Error(msg), measured(measured), bound(bound) {}
  double measured;
  double bound;
};

// Reuleaux order that is even (or below 3).
class EvenOrder : public Error {
 public:
  using Error::Error;
};

// Corner radius out of range for a rounded Reuleaux polygon.
class BadRadius : public Error {
 public:
  using Error::Error;
};

// Vanishing first derivative where a regular point is required.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature failed to reach its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Normal-construction point y(t) does not land on the curve.
class NormalMiss : public Error {
 public:
  using Error::Error;
};

// Chord angle fails to increase monotonically through 2*pi.
class NonMonotoneAngle : public Error {
 public:
  using Error::Error;
};

// Malformed JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed JSON that violates the config schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Curve construction failed for an otherwise schema-valid config.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cw
