#pragma once

#include <stdexcept>
#include <string>

namespace gpindex {

// Malformed or semantically invalid input (bad ids, self-loops, bad graph6,
// disconnected graph where connectivity is required).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class NotConnected : public InvalidInput {
 public:
  NotConnected() : InvalidInput("graph is not connected") {}
};

// Input exceeds a hard or configured size cap.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

// A result violated a proven invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gpindex
