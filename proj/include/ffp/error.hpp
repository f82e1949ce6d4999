#ifndef FFP_ERROR_HPP
#define FFP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ffp {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller passed structurally invalid arguments (degree mismatch,
/// zero dilation factor, incomparable partitions, ...).
struct ArgumentError : Error {
  using Error::Error;
};

/// A value-level precondition failed (non-real-rooted input where a
/// measure is required, zero variance, unnormalized CLT input, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A partition-lattice computation was requested above the configured cap.
struct CapError : Error {
  using Error::Error;
};

/// An iterative numeric routine failed to converge.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace ffp

#endif
