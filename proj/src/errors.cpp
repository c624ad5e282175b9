#include "heapgr/errors.hpp"

#include <sstream>

namespace heapgr {
namespace {

std::string located(std::string_view source, std::size_t line,
                    std::size_t column, std::string_view message) {
  std::ostringstream out;
  out << source << ':' << line << ':' << column << ": " << message;
  return out.str();
}

}  // namespace

ParseError::ParseError(std::string_view source, std::size_t line,
                       std::size_t column, std::string_view message)
    : InputError(located(source, line, column, message)),
      line_(line),
      column_(column) {}

}  // namespace heapgr
