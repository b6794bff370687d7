#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tlh {

enum class Errc {
  ZeroVector,
  DegeneratePair,
  OffCircle,
  AllDegenerate,
  OutsideHemisphere,
  OnCoordinateCircle,
  NoIntersection,
  NotInOmega,
  NotRelated,
  InternalMismatch,
  NonPositiveInput,
  OutOfRegion,
  BaseOutsideQuadrant,
  PreconditionViolated,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Single exception type for every domain error in the library; callers
/// dispatch on code().
class GeometryError : public std::runtime_error {
 public:
  GeometryError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DegeneratePair: return "DegeneratePair";
    case Errc::OffCircle: return "OffCircle";
    case Errc::AllDegenerate: return "AllDegenerate";
    case Errc::OutsideHemisphere: return "OutsideHemisphere";
    case Errc::OnCoordinateCircle: return "OnCoordinateCircle";
    case Errc::NoIntersection: return "NoIntersection";
    case Errc::NotInOmega: return "NotInOmega";
    case Errc::NotRelated: return "NotRelated";
    case Errc::InternalMismatch: return "InternalMismatch";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::OutOfRegion: return "OutOfRegion";
    case Errc::BaseOutsideQuadrant: return "BaseOutsideQuadrant";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tlh
