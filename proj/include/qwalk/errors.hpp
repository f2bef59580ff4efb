#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched spatial or coin dimensions between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A construction constraint (phase sum, zero-sum shifts, unitarity, ...) failed.
class ConstraintError : public Error {
 public:
  ConstraintError(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ZeroSumViolation : public ConstraintError {
 public:
  ZeroSumViolation(const std::string& what, std::size_t dimension, double residual)
      : ConstraintError(what, residual), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

// Lattice coordinate left the machine integer range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Dense oracle window cannot contain the evolution without touching its edge.
class WindowTooSmall : public RangeError {
 public:
  WindowTooSmall(const std::string& what, std::size_t dimension, long long required)
      : RangeError(what), dimension_(dimension), required_(required) {}
  std::size_t dimension() const { return dimension_; }
  long long required() const { return required_; }

 private:
  std::size_t dimension_;
  long long required_;
};

// Invalid configuration input; `field()` is a JSON path such as "shifts[0]".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace qwalk
