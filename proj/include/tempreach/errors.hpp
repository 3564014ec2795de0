#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempreach {

// Malformed or inconsistent input data (bad event files, mismatched sizes).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure tied to a line of an input file.
class parse_error : public data_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : data_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tempreach
