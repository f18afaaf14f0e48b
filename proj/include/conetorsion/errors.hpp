#pragma once

#include <stdexcept>
#include <string>

namespace ct {

/// An argument lies outside the domain where an operation is defined or
/// where its error bounds are proved.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string function, std::string detail)
      : std::domain_error(function + ": domain-error: " + detail),
        function_(std::move(function)),
        detail_(std::move(detail)) {}

  const std::string& function() const { return function_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string function_;
  std::string detail_;
};

/// The argument interval touches a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ct
