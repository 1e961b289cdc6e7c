#pragma once

#include <stdexcept>
#include <string>

namespace padichyp {

// Argument outside the mathematical domain of an operation (t = 0, p | denominator, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A result is not known to the requested number of p-adic digits.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace padichyp
