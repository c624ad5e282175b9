#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heapgr {

// Input that cannot be represented: bad syntax, out-of-range indices,
// even-length words, foreign letters, mismatched sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a text file, located by 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(std::string_view source, std::size_t line, std::size_t column,
             std::string_view message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that fails an algebraic requirement: a table that is not
// a heap or group, a map that is not a homomorphism, a non-normal sub-heap.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heapgr
