#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fockseries {

enum class ErrorCode {
  InvalidParameter,
  DegenerateAmplitude,
  HardCapExceeded,
  VacuumUndefined,
  InvalidTheta,
  UnnormalizedInput,
  Unconverged,
  DimensionTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// front ends can map them onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fockseries
