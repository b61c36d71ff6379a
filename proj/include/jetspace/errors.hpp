#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetspace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or problem file. `position` is a 0-based
/// character offset into the parsed text (or a 1-based line for files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An operation was called outside its documented domain: unknown variable,
/// ring mismatch, negative level, zero polynomial where one is forbidden, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Gröbner computation hit its pair or degree cap. Never a wrong answer.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same invariant disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetspace
