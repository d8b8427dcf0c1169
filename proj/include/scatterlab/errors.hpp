#pragma once

#include <stdexcept>
#include <string>

namespace scatterlab {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation (e.g. Hankel at x <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Shapes of operands do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Matrix numerically singular during a factorization.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition was violated (e.g. non-Hermitian input to eigh).
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf encountered inside an iterative solver.
class NumericalBreakdownError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment / scene configuration (bad layout divisibility, unknown keys, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Geometry violations (coincident points, receiver on a scatterer, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Problem size exceeds the configured dense cap.
class DenseCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace scatterlab
