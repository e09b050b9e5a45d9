#pragma once

#include <stdexcept>
#include <string>

namespace lamsub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 0 when the text did not come from a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0)
      : Error(what), column_(column), line_(line) {}

  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

// A request the bound base logic cannot serve (e.g. coordination without a
// join operation).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A contract violation on otherwise well-formed values: invalid occurrence
// paths, undeclared atoms, inconsistent inputs to entailment checking.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lamsub
