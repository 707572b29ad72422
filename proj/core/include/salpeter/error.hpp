#pragma once

#include <stdexcept>
#include <string>

namespace salpeter {

// A precondition on an argument was violated. The message names it.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A kernel or symbol is undefined at the requested momenta.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The truncated derivative series was asked to act on momenta outside its
// radius of convergence.
class SeriesDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace salpeter
