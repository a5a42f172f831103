#pragma once

#include <stdexcept>
#include <string>

namespace ctgraph {

/// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A configured size or search budget was hit before an answer was reached.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ctgraph
