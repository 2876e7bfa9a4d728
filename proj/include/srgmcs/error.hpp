#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srgmcs {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs outside a function's mathematical domain (t < 0, a <= 0, NaN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A well-formed evaluation that produced a non-finite value.
class EvaluationFault : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Data that parsed but violates a dataset invariant.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " at line " + std::to_string(line) : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid optimizer or experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace srgmcs
