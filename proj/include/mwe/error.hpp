#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwe {

/// Error raised while reading one of the line-oriented TSV resources.
/// Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mwe
