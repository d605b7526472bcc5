#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heisred {

/// Syntax error in equation text; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string const &message)
      : std::runtime_error("position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration or search would exceed its configured cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heisred
