#pragma once

#include <stdexcept>
#include <string>

namespace rsk {

// Malformed textual input. `position` is the 1-based index of the offending
// token (or character, for formats without a token structure).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int position)
      : std::runtime_error(message), position_(position) {}

  int position() const { return position_; }

 private:
  int position_;
};

// A documented precondition was violated by the caller.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic left the representable range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rsk
