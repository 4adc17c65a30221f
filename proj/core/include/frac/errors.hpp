#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frac {

/// Argument outside the mathematical domain of an operation
/// (pole of Gamma, fractional order outside (0,1), ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Two sampled functions that must share a grid do not.
class GridMismatchError : public std::invalid_argument {
public:
  explicit GridMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

namespace expr {

/// Raised by the expression parser; `offset` is the 0-based byte
/// offset into the source text where the problem was detected.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// Raised during expression evaluation (log of a non-positive value,
/// division by zero, ...). `offset` locates the offending node in the
/// original source text; -1 for synthesized nodes.
class EvalError : public std::runtime_error {
public:
  EvalError(long offset, const std::string& message)
      : std::runtime_error(message), offset(offset) {}
  long offset;
};

} // namespace expr
} // namespace frac
