#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

// Input violates a mathematical precondition (value outside a map's domain,
// non-member passed to a classifier, ...). The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. The CLI maps this to exit code 1.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cfk
