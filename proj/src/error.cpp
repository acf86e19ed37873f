#include "zdlab/error.hpp"

namespace zdlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadEntry: return "BadEntry";
    case ErrorKind::NotAbelianGroup: return "NotAbelianGroup";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyFactorList: return "EmptyFactorList";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotLeftIdentity: return "NotLeftIdentity";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotASubring: return "NotASubring";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::VertexNotInGraph: return "VertexNotInGraph";
    case ErrorKind::InternalInvariantViolation:
      return "InternalInvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

RingError::RingError(ErrorKind kind, const std::string& detail,
                     std::vector<std::uint32_t> witnesses)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      witnesses_(std::move(witnesses)) {}

}  // namespace zdlab
