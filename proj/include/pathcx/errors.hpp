#pragma once

#include <stdexcept>
#include <string>

namespace pathcx {

/// Malformed or inconsistent input: unknown ids, non-subsets, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is undefined for this (valid) input, e.g. a cut-set when s = t.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size guard was exceeded. The message names the limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pathcx
