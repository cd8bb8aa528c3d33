#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gabor {

enum class ErrorKind {
  InvalidSet,
  InvalidWindow,
  InvalidAtom,
  ParameterMismatch,
  ImaginaryResidue,
  FormDisagreement,
  SupportTooWide,
  SingularDiagonal,
  DensityViolation,
  ShapeViolation,
  UnsupportedSet,
  GridTooCoarse,
  DimensionMismatch,
  RangeViolation,
  Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gabor
