#include <gtest/gtest.h>

#include "heapgr/errors.hpp"
#include "heapgr/free_heap.hpp"

using namespace heapgr;

namespace {

AlphabetPtr xyz() { return Alphabet::make({"x", "y", "z", "w", "a", "b", "c"}); }

std::string red(const std::string& raw) { return parse_word(xyz(), raw).str(); }

std::string tern(const std::string& u, const std::string& v, const std::string& w) {
  const auto alphabet = xyz();
  return ternary(parse_word(alphabet, u), parse_word(alphabet, v), parse_word(alphabet, w)).str();
}

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_EQ(red("x x y"), "y");
  EXPECT_EQ(red("x y z"), "x y z");
  EXPECT_EQ(red("x y y x z"), "z");
  EXPECT_EQ(red("x y z z y"), "x");
}

TEST(Reduce, RejectsEvenLengthAndForeignLetters) {
  EXPECT_THROW(parse_word(xyz(), "x y"), InputError);
  EXPECT_THROW(parse_word(xyz(), ""), InputError);
  EXPECT_THROW(parse_word(xyz(), "x q y"), InputError);
  EXPECT_THROW(HeapWord(xyz(), {0, 0, 1}), InputError);
}

TEST(Ternary, Examples) {
  EXPECT_EQ(tern("x", "x", "y"), "y");
  EXPECT_EQ(tern("x", "y", "z"), "x y z");
  EXPECT_EQ(tern("x y z", "x y z", "a b c"), "a b c");
  EXPECT_EQ(tern("x y z", "w y z", "w a b"), "x a b");
}

TEST(Ternary, RejectsMixedAlphabets) {
  const auto a = Alphabet::make({"x"});
  const auto b = Alphabet::make({"y"});
  EXPECT_THROW(ternary(HeapWord::generator(a, 0), HeapWord::generator(a, 0),
                       HeapWord::generator(b, 0)),
               InputError);
}

TEST(LiftMap, IdentityAndForcedCancellation) {
  const auto from = Alphabet::make({"x", "y", "z"});
  const auto to = Alphabet::make({"a", "b"});
  const HeapWord w = parse_word(from, "x y z");
  EXPECT_EQ(lift_map(LetterMap(from, from, {0, 1, 2}), w), w);
  // x, y -> a and z -> b.
  EXPECT_EQ(lift_map(LetterMap(from, to, {0, 0, 1}), w).str(), "b");
}

TEST(Enumerate, Examples) {
  const auto one = Alphabet::make({"x"});
  for (std::size_t bound : {1u, 3u, 7u}) {
    const auto words = enumerate_reduced(one, bound);
    ASSERT_EQ(words.size(), 1u);
    EXPECT_EQ(words[0].str(), "x");
  }
  const auto two = Alphabet::make({"x", "y"});
  std::vector<std::string> got;
  for (const auto& w : enumerate_reduced(two, 3)) got.push_back(w.str());
  EXPECT_EQ(got, (std::vector<std::string>{"x", "y", "x y x", "y x y"}));

  const auto three = Alphabet::make({"x", "y", "z"});
  std::size_t length3 = 0;
  for (const auto& w : enumerate_reduced(three, 3)) length3 += w.length() == 3;
  EXPECT_EQ(length3, 12u);
  EXPECT_EQ(reduced_word_count(3, 3), 12u);
  EXPECT_EQ(reduced_word_count(2, 9), 2u);
  EXPECT_EQ(reduced_word_count(4, 5), 4u * 81u);
  EXPECT_THROW(enumerate_reduced(three, 4), InputError);
}

TEST(Alphabet, Validation) {
  EXPECT_THROW(Alphabet::make({"x", "x"}), InputError);
  EXPECT_THROW(Alphabet::make({"*"}), InputError);
  EXPECT_THROW(Alphabet::make({""}), InputError);
  EXPECT_THROW(Alphabet::make({"a b"}), InputError);
  const std::vector<std::string> lines{"z x *", "y z"};
  EXPECT_EQ(Alphabet::infer(lines)->symbols(), (std::vector<std::string>{"x", "y", "z"}));
  const auto pointed = Alphabet::with_point(Alphabet::make({"x", "y"}));
  EXPECT_TRUE(pointed->has_point());
  EXPECT_EQ(pointed->symbol(pointed->point()), "*");
  EXPECT_EQ(pointed->point(), 2u);
}
