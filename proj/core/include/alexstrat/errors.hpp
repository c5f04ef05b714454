#pragma once

#include <stdexcept>
#include <string>

namespace alexstrat {

// Bad user input (malformed presentation text, invalid character data,
// non-homomorphism, ...). The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with source position, 1-based.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace alexstrat
