#include "graphdelta/error.hpp"

namespace graphdelta {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::BadVertex: return "BadVertex";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::FormatError: return "FormatError";
    case Errc::NotConnected: return "NotConnected";
    case Errc::Degenerate: return "Degenerate";
    case Errc::AdjacentPair: return "AdjacentPair";
    case Errc::SamePair: return "SamePair";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::OutOfTheoremRange: return "OutOfTheoremRange";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::ConstructionMismatch: return "ConstructionMismatch";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
  }
  return "Unknown";
}

}  // namespace graphdelta
