#include "hsetkit/error.hpp"

namespace hsetkit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DegeneratePoints: return "DegeneratePoints";
    case Errc::PointTooClose: return "PointTooClose";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::MaxIterations: return "MaxIterations";
    case Errc::NotAnHSet: return "NotAnHSet";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::ExhaustedCandidates: return "ExhaustedCandidates";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace hsetkit
