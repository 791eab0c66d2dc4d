#pragma once

#include <stdexcept>
#include <string>

namespace irrenum {

// Bad arguments, violated preconditions, malformed structures.
// CLI maps this (and parse/class errors) to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance file; line is 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A class-gated strategy was requested for an input not (verifiably) in the class.
class ClassError : public std::runtime_error {
 public:
  explicit ClassError(const std::string& what) : std::runtime_error(what) {}
};

// Brute-force oracle refused an instance above its vertex cap.
// CLI maps this to exit code 3.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// A random generator failed to produce a valid instance within its retry budget.
class GenerationError : public InputError {
 public:
  explicit GenerationError(const std::string& what) : InputError(what) {}
};

}  // namespace irrenum
