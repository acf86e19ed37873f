#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zdlab {

enum class ErrorKind {
  BadEntry,
  NotAbelianGroup,
  NotAssociative,
  NotDistributive,
  IndexOutOfRange,
  EmptyFactorList,
  BadDimensions,
  NotPrime,
  TooLarge,
  NotLeftIdentity,
  NotAnIdeal,
  NotASubring,
  OrderTooLarge,
  VertexNotInGraph,
  InternalInvariantViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this exception. The
// witnesses carry the offending element indices (e.g. the (i, j, k) triple
// breaking associativity) so callers can reproduce the failure.
class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& detail,
            std::vector<std::uint32_t> witnesses = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& witnesses() const noexcept {
    return witnesses_;
  }

 private:
  ErrorKind kind_;
  std::vector<std::uint32_t> witnesses_;
};

}  // namespace zdlab
