#include "fockseries/error.hpp"

namespace fockseries {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DegenerateAmplitude: return "DegenerateAmplitude";
    case ErrorCode::HardCapExceeded: return "HardCapExceeded";
    case ErrorCode::VacuumUndefined: return "VacuumUndefined";
    case ErrorCode::InvalidTheta: return "InvalidTheta";
    case ErrorCode::UnnormalizedInput: return "UnnormalizedInput";
    case ErrorCode::Unconverged: return "Unconverged";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
  }
  return "Unknown";
}

}  // namespace fockseries
