#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

// Input text could not be parsed. `line` is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// A computation would exceed its configured size guard.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation's precondition was violated (loop where none allowed, wrong
// polynomial shape, invalid basis key, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gpoly
