#pragma once

// Plain-text table files:
//   heap n    followed by n^3 integers, a-major then b then c
//   group n   followed by n^2 integers, a-major
//   map n m   followed by n integers

#include <string>
#include <string_view>

#include "heapgr/finite.hpp"

namespace heapgr {

// `source` names the input in diagnostics. Syntax errors throw ParseError;
// a group table that is not a group throws DomainError.
FiniteHeap parse_heap(std::string_view text, std::string_view source = "<input>");
FiniteGroup parse_group(std::string_view text, std::string_view source = "<input>");
FiniteMap parse_map(std::string_view text, std::string_view source = "<input>");

// Raw group table without validating the group laws.
struct GroupTable {
  std::size_t size;
  std::vector<Element> table;
};
GroupTable parse_group_table(std::string_view text, std::string_view source = "<input>");

std::string format_heap(const FiniteHeap& heap);
std::string format_group(const FiniteGroup& group);
std::string format_map(const FiniteMap& map);

std::string read_file(const std::string& path);

}  // namespace heapgr
