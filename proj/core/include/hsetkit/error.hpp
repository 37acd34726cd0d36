#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsetkit {

enum class Errc {
  InvalidArgument,
  DimensionMismatch,
  NotSymmetric,
  DegeneratePoints,
  PointTooClose,
  EmptyInput,
  MaxIterations,
  NotAnHSet,
  EmptySupport,
  EmptySelection,
  ExhaustedCandidates,
  Io,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a machine-readable error category.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hsetkit
