#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mck {

/// Invalid caller input: malformed files, violated preconditions, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text-format error carrying the byte offset (graph6) or line number (edge list) where it occurred.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An exact search ran past its configured size or node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mck
