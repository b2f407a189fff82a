#include "grcodes/errors.hpp"

namespace grcodes {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPrimitiveInput: return "NonPrimitiveInput";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::InvalidTower: return "InvalidTower";
    case Errc::IncompatibleTower: return "IncompatibleTower";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotRational: return "NotRational";
    case Errc::NonIntegralCount: return "NonIntegralCount";
    case Errc::NegativeCount: return "NegativeCount";
    case Errc::CountOutOfRange: return "CountOutOfRange";
    case Errc::InvalidSubgroup: return "InvalidSubgroup";
    case Errc::ScaleGuard: return "ScaleGuard";
    case Errc::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace grcodes
