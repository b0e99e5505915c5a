// Exception types thrown by the groupstar library.

#ifndef GROUPSTAR_ERROR_HPP_
#define GROUPSTAR_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupstar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct UnknownLabel : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct InvalidIrrep : Error {
  using Error::Error;
};

struct GroupMismatch : Error {
  using Error::Error;
};

struct OrthogonalityViolation : Error {
  OrthogonalityViolation(std::size_t i_, std::size_t j_, double residual_)
      : Error("Tr(U(" + std::to_string(i_) + ")D(" + std::to_string(j_) +
              ")) deviates from delta by " + std::to_string(residual_)),
        i(i_), j(j_), residual(residual_) {}
  std::size_t i;
  std::size_t j;
  double residual;
};

struct NonFiniteInput : Error {
  using Error::Error;
};

struct InsufficientNodes : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

// Malformed document or unreadable file.
struct IoError : Error {
  using Error::Error;
};

}  // namespace groupstar

#endif  // GROUPSTAR_ERROR_HPP_
