#pragma once

#include <stdexcept>
#include <string>

namespace rfun {

/// An argument lies outside the mathematical domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller-supplied parameter (tolerance, grid size, ...) is unusable.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result that the analysis guarantees cannot happen was observed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rfun
