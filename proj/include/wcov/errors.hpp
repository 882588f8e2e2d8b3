#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcov {

// Input exceeds a hard size limit: universe slots, canonicalization cap,
// independent-set enumeration cap. Maps to CLI exit code 3.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 input or predicate expression. `offset` is the 0-based
// byte/character position inside the offending string; `line` is 1-based
// when the input came from a file, 0 otherwise. Maps to CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace wcov
