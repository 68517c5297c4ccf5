#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or dimensionally inconsistent input.
class InputError : public Error {
public:
  using Error::Error;
};

/// A structure tensor that is not a Lie bracket.
class ValidationError : public Error {
public:
  enum class Kind { Antisymmetry, Jacobi };
  ValidationError(Kind kind, std::size_t i, std::size_t j, std::size_t k, const std::string& what)
      : Error(what), kind_(kind), i_(i), j_(j), k_(k) {}
  Kind kind() const { return kind_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

private:
  Kind kind_;
  std::size_t i_, j_, k_;
};

class NotAnIdeal : public Error {
public:
  using Error::Error;
};

class NotProductIdeal : public Error {
public:
  using Error::Error;
};

class NotRegularNilpotent : public Error {
public:
  using Error::Error;
};

class NotInvertible : public Error {
public:
  using Error::Error;
};

class HypothesisFailed : public Error {
public:
  using Error::Error;
};

class PreconditionFailed : public Error {
public:
  using Error::Error;
};

class InvariantViolation : public Error {
public:
  using Error::Error;
};

class NotLeftSymmetric : public Error {
public:
  using Error::Error;
};

class NotTwoStepSolvable : public Error {
public:
  using Error::Error;
};

class NotNilpotentAlgebra : public Error {
public:
  using Error::Error;
};

class NotACocycle : public Error {
public:
  using Error::Error;
};

class InconsistentSystem : public Error {
public:
  using Error::Error;
};

class GammaExpansionFailed : public Error {
public:
  using Error::Error;
};

class LiftCheckFailed : public Error {
public:
  using Error::Error;
};

class UnknownFixture : public Error {
public:
  using Error::Error;
};

/// An internal identity that must hold by construction did not.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace novikov
