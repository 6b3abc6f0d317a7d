#pragma once

#include <stdexcept>
#include <string>

namespace mdscoset {

/// Argument outside the mathematical domain of an operation (bad parameters,
/// out-of-range weight, non-prime-power field order, inverse of zero, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Requested computation exceeds the enumeration or memory budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mdscoset
