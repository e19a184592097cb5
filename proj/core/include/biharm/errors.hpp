#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biharm {

enum class ErrorKind {
  NonFinite,
  NotInvertible,
  ZeroElement,
  InvalidBasis,
  DegreeOverflow,
  InvalidDegree,
  InvalidGrid,
  GridTooSmall,
  DegenerateDirection,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the kernel carries a kind so front ends can map it
// to a stable, machine-parsable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace biharm
