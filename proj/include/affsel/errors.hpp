#pragma once

#include <stdexcept>
#include <string>

namespace affsel {

/// Degenerate simplex or other broken geometric invariant.
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// A point that was required to lie in the domain of a multifunction does not.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Simplex fitting exhausted its shrink budget: the point is on the boundary
/// or the domain is not full-dimensional.
class NotInteriorError : public std::runtime_error {
 public:
  explicit NotInteriorError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Instance size outside the supported range (e.g. extension codomains with
/// more than 3 dimensions).
class UnsupportedSizeError : public std::invalid_argument {
 public:
  explicit UnsupportedSizeError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace affsel
