#include <gtest/gtest.h>

#include "heapgr/catalog.hpp"
#include "heapgr/errors.hpp"
#include "heapgr/oracles.hpp"
#include "heapgr/suites.hpp"

using namespace heapgr;

TEST(Oracles, NaiveReductionStrategies) {
  // x y y x z over letters x=0, y=1, z=2.
  const std::vector<Letter> raw{0, 1, 1, 0, 2};
  EXPECT_EQ(oracle::naive_reduce(raw, oracle::Strategy::leftmost), (std::vector<Letter>{2}));
  EXPECT_EQ(oracle::naive_reduce(raw, oracle::Strategy::rightmost), (std::vector<Letter>{2}));
  EXPECT_EQ(oracle::all_reductions({0, 0, 0}), (std::set<std::vector<Letter>>{{0}}));
}

TEST(Oracles, BruteForceHomCounts) {
  EXPECT_EQ(oracle::brute_force_group_homs(cyclic_group(4), cyclic_group(6)).size(), 2u);
  EXPECT_EQ(oracle::brute_force_group_homs(symmetric_group(3), symmetric_group(3)).size(), 10u);
}

TEST(Oracles, RelabelPreservesAxioms) {
  const FiniteHeap h = associated_heap(symmetric_group(3));
  const FiniteHeap r = oracle::relabel(h, {1, 0, 2, 3, 4, 5});
  EXPECT_TRUE(verify_heap_axioms(r).passed());
  EXPECT_NE(r, h);
  EXPECT_EQ(oracle::relabel(r, {1, 0, 2, 3, 4, 5}), h);
}

TEST(Suites, RunSuiteRejectsUnknownNames) {
  EXPECT_THROW(verify::run_suite("nope", {}), InputError);
}

TEST(Suites, OutputIsDeterministicForASeed) {
  verify::SuiteOptions options;
  options.seed = 7;
  const auto a = verify::run_suite("free-heap", options);
  const auto b = verify::run_suite("free-heap", options);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].detail, b[i].detail);
}
