#pragma once

#include <stdexcept>

namespace polyherm {

/// Raised when parameters leave the domain where a formula is valid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace polyherm
