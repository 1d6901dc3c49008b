#pragma once

#include <stdexcept>
#include <string>

namespace qhorn {

/// Malformed or inconsistent input. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A subfamily names a label that the ambient family does not contain.
class ContainmentError : public InputError {
 public:
  explicit ContainmentError(const std::string& what) : InputError(what) {}
};

/// A parse failure that can be pinned to a line of an input file.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Computation refused because a configured size limit would be exceeded.
/// The CLI maps these (and ArithmeticOverflow) to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class ArithmeticOverflow : public std::runtime_error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qhorn
