#pragma once

#include <stdexcept>
#include <string>

namespace latmin {

// Mirrors the LATMIN_E_* codes of the C interface.
enum class Status : int {
  Ok = 0,
  InvalidArgument = 1,
  DimensionMismatch = 2,
  NotPositiveDefinite = 3,
  NotSymmetric = 4,
  UnsupportedSize = 5,
  DependentSubset = 6,
  NotWellRounded = 7,
  NoUnitCoefficient = 8,
  InconsistentWords = 9,
  IterationLimitExceeded = 10,
  ParseError = 11,
  IoError = 12,
  GroupTooLarge = 13,
  Internal = 99,
};

const char* status_name(Status s) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

}  // namespace latmin
