#include <gtest/gtest.h>

#include "heapgr/catalog.hpp"
#include "heapgr/errors.hpp"
#include "heapgr/table_io.hpp"

using namespace heapgr;

TEST(TableIo, ParsesHeapFile) {
  const FiniteHeap h = parse_heap("heap 1\n0\n");
  EXPECT_EQ(h, FiniteHeap::singleton());
}

TEST(TableIo, RoundTripsFormats) {
  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(parse_group(format_group(s3)), s3);
  const FiniteHeap h = associated_heap(s3);
  EXPECT_EQ(parse_heap(format_heap(h)), h);
  const FiniteMap f(3, 2, {0, 1, 1});
  EXPECT_EQ(parse_map(format_map(f)), f);
  EXPECT_EQ(format_map(f), "map 3 2\n0 1 1\n");
}

TEST(TableIo, ReportsLineAndColumn) {
  try {
    parse_group("group 2\n0 1\n1 x\n", "g.tbl");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("g.tbl:3:3"), std::string::npos);
  }
}

TEST(TableIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_heap("heap 2\n0 0 0\n"), ParseError);
  EXPECT_THROW(parse_heap("group 1\n0\n"), ParseError);
  EXPECT_THROW(parse_heap("heap 1\n0 0\n"), ParseError);
  EXPECT_THROW(parse_heap("heap 1\n1\n"), InputError);
  EXPECT_THROW(parse_map("map 2 1\n0 1\n"), InputError);
}

TEST(TableIo, GroupLawsAreDomainErrors) {
  EXPECT_THROW(parse_group("group 2\n0 0\n0 0\n"), DomainError);
  const GroupTable raw = parse_group_table("group 2\n0 0\n0 0\n");
  EXPECT_EQ(raw.size, 2u);
}
