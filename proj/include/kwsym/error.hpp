#pragma once

#include <stdexcept>
#include <string>

namespace kwsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by caller-supplied values (degree mismatch, N > V, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration or dense construction would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace kwsym
