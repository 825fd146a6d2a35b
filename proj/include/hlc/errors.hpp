#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlc {

// Malformed input data. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line_number = 0)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line_number_(line_number) {}

  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

// Inputs that are individually valid but mutually inconsistent
// (e.g. a clustering whose leaf count does not match the hypergraph).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace hlc
