#include "biharm/errors.hpp"

namespace biharm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
  }
  return "Unknown";
}

}  // namespace biharm
