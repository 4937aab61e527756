#pragma once

#include <stdexcept>
#include <string>

namespace balg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes do not agree with the algebra or space they belong to.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input file does not conform to the algebra/action JSON schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A constructor refused its inputs; the message names the failed axiom.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A checker was called on an instance outside its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Tolerance breakdown or retry exhaustion inside a numerical routine.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Instance generation ran out of its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace balg
