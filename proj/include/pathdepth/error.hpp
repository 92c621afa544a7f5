#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathdepth {

/// Malformed text input (quiver files, generator files, field specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An input object violates a documented invariant (non-associative table,
/// non-ideal, mismatched algebra pair, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result contradicts a structural implication the engine relies
/// on. Always a bug, never a finding.
class EngineInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pathdepth
