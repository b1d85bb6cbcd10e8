#pragma once

#include <stdexcept>
#include <string>

namespace bgc {

// Malformed input file. `line` is 1-based; 0 when the failure is not tied to
// a specific line (e.g. truncated file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace bgc
