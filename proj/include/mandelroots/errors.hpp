#ifndef MANDELROOTS_ERRORS_HPP
#define MANDELROOTS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mandelroots {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

// Bad magic, truncation, unparsable rows.
struct FormatError : Error {
  using Error::Error;
};

// Violated value precondition (non-finite point, degree mismatch, bad config).
struct ValidationError : Error {
  using Error::Error;
};

// Operation applied to an object in the wrong state (e.g. not converged).
struct StateError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

struct DuplicatePointsError : Error {
  std::size_t first, second;
  DuplicatePointsError(std::size_t i, std::size_t j)
      : Error("exact duplicate points at indices " + std::to_string(i) + " and " +
              std::to_string(j)),
        first(i), second(j) {}
};

struct ProbeCollisionError : Error {
  std::size_t index;
  explicit ProbeCollisionError(std::size_t i)
      : Error("probe coincides with approximation " + std::to_string(i)), index(i) {}
};

}  // namespace mandelroots

#endif
