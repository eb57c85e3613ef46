#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencliff {

/// Malformed expression or input document. `position()` is a byte offset
/// into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live on different coordinate charts.
class ChartMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two structures disagree on the flux their integrability is judged by.
class FluxMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A twisted bracket was requested with a 3-form that is not closed.
class NonClosedFlux : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An algebraic precondition of an operation does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gencliff
