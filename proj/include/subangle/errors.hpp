#pragma once

#include <stdexcept>
#include <string>

namespace subangle {

/// Operand shapes or ambient dimensions do not match.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the domain of an operation (wrong field, zero subspace, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation could not produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Gram matrix of a supplied basis is singular to working precision.
class DegenerateBasisError : public NumericalError {
 public:
  explicit DegenerateBasisError(const std::string& what) : NumericalError(what) {}
};

}  // namespace subangle
