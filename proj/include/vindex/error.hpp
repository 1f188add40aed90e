#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vindex {

// Base for every error the toolkit raises. `line` is the 1-based input line
// the error was detected on, or 0 when it is not tied to a line.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }
  virtual const char* kind() const noexcept { return "error"; }

 private:
  std::size_t line_;
};

// Counts or arguments that violate a metric's domain (sc > c, cd = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain error"; }
};

// Malformed input record.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse error"; }
};

// Well-formed records that are inconsistent with each other (duplicate ids).
class IntegrityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "integrity error"; }
};

// Reference to a paper, edge or entity that does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "lookup error"; }
};

}  // namespace vindex
