#pragma once

#include <stdexcept>
#include <string>

namespace eincausal {

/// Requested geodesic between antipodal endpoints is not unique.
class AmbiguousGeodesicError : public std::runtime_error {
 public:
  explicit AmbiguousGeodesicError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A continuous point could not be matched to a grid node at the
/// grid's resolution.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The operation is well-formed but undefined for this input
/// (e.g. a Lipschitz check on an infinite field).
class NotApplicableError : public std::runtime_error {
 public:
  explicit NotApplicableError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace eincausal
