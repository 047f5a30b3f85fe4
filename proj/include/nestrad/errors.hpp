#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nestrad {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed sequence expression. `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(std::uint64_t index)
      : Error("division by zero evaluating sequence at index " + std::to_string(index)),
        index_(index) {}

  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::uint64_t index, std::size_t length)
      : Error(index == 0 ? std::string("sequence index 0 out of range (indices start at 1)")
                         : "sequence index " + std::to_string(index) + " outside explicit list of length " +
                               std::to_string(length)),
        index_(index) {}

  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// A square root (or the square-root argument of a scheme) would be taken of a
/// negative number. depth 0 means the failure is not tied to a nesting level.
class NegativeRadicand : public Error {
 public:
  NegativeRadicand(std::uint64_t depth, const std::string& what)
      : Error("negative radicand at depth " + std::to_string(depth) + ": " + what),
        depth_(depth) {}

  std::uint64_t depth() const noexcept { return depth_; }

 private:
  std::uint64_t depth_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : Error("config key '" + key + "': " + message), key_(key) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace nestrad
