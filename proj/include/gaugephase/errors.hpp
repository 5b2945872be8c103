#pragma once

#include <stdexcept>
#include <string>

namespace gaugephase {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An evaluator threw or returned a non-finite value.
class EvaluationError : public Error {
public:
  EvaluationError(const std::string& what, double x, double y, double t);
  double x, y, t;
};

/// Fields of the two systems differ at the observation point.
class FieldAtObservationError : public Error {
public:
  FieldAtObservationError(const std::string& what, double value);
  double value;
};

/// A gauge-fixing function failed its independence check.
class DecompositionUnsupported : public Error {
public:
  DecompositionUnsupported(const std::string& what, std::string coordinate, double at);
  std::string coordinate;
  double at;
};

/// Adaptive quadrature ran out of depth.
class ToleranceNotMet : public Error {
public:
  ToleranceNotMet(const std::string& what, double best_estimate);
  double best_estimate;
};

class SingularPointError : public Error {
public:
  using Error::Error;
};

/// Scenario parse or validation failure; `path` points at the offending field.
class ScenarioError : public Error {
public:
  ScenarioError(const std::string& what, std::string path);
  std::string path;
};

} // namespace gaugephase
