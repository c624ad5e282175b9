#include <gtest/gtest.h>

#include "heapgr/errors.hpp"
#include "heapgr/free_group.hpp"

using namespace heapgr;

namespace {

AlphabetPtr base() { return Alphabet::make({"x", "y", "z"}); }

PointedWord pw(const std::string& s) { return parse_pointed(base(), s); }
ClassicalWord cw(const std::string& s) { return parse_classical(base(), s); }

}  // namespace

TEST(FreeGroup, IdentityLaws) {
  EXPECT_EQ(fg_identity(base()).str(), "*");
  EXPECT_EQ(fg_mul(fg_identity(base()), pw("x")), pw("x"));
  EXPECT_EQ(fg_mul(pw("x * y"), fg_identity(base())), pw("x * y"));
  EXPECT_EQ(to_classical(fg_identity(base())), ClassicalWord::identity(base()));
}

TEST(FreeGroup, MulExamples) {
  EXPECT_EQ(fg_mul(pw("x"), pw("y")).str(), "x * y");
  EXPECT_EQ(fg_mul(pw("x"), pw("* x *")).str(), "*");
  EXPECT_EQ(fg_mul(pw("x * y"), pw("* y *")).str(), "x");
}

TEST(FreeGroup, InvExamples) {
  EXPECT_EQ(fg_inv(pw("x")).str(), "* x *");
  EXPECT_EQ(fg_inv(pw("*")).str(), "*");
  EXPECT_EQ(fg_inv(pw("x * y")).str(), "* y * x *");
  EXPECT_EQ(fg_mul(pw("x * y"), fg_inv(pw("x * y"))).str(), "*");
}

TEST(FreeGroup, ToClassicalExamples) {
  EXPECT_EQ(to_classical(pw("x * y")), cw("x y"));
  EXPECT_EQ(to_classical(pw("* x *")), cw("x^-1"));
  EXPECT_EQ(to_classical(pw("*")).length(), 0u);
  EXPECT_EQ(to_classical(pw("* x *")).str(), "x^-1");
  // Alternating signs: x y^-1 z.
  EXPECT_EQ(to_classical(pw("x y z")), cw("x y^-1 z"));
}

TEST(FreeGroup, FromClassicalExamples) {
  EXPECT_EQ(from_classical(cw("x y")).str(), "x * y");
  EXPECT_EQ(from_classical(cw("x y^-1")).str(), "x y *");
  EXPECT_EQ(from_classical(ClassicalWord::identity(base())).str(), "*");
  EXPECT_EQ(from_classical(cw("x^-1")).str(), "* x *");
}

TEST(Classical, Arithmetic) {
  EXPECT_EQ(classical_mul(cw("x"), cw("x^-1")).length(), 0u);
  EXPECT_EQ(classical_inv(cw("x y^-1")), cw("y x^-1"));
  EXPECT_EQ(classical_mul(cw("x y"), cw("y^-1 z")), cw("x z"));
  EXPECT_EQ(cw("x^1"), cw("x"));
}

TEST(Classical, RejectsMalformed) {
  EXPECT_THROW(cw("x x^-1"), InputError);
  EXPECT_THROW(cw("x^2"), InputError);
  EXPECT_THROW(cw("q"), InputError);
  EXPECT_THROW(pw("x y"), InputError);
}

TEST(Classical, EnumerationCounts) {
  // 1 + 2m (2m-1)^(k-1) summed: over 2 letters, lengths 0..3 give 1 + 4 + 12 + 36.
  const auto two = Alphabet::make({"x", "y"});
  EXPECT_EQ(enumerate_classical(two, 3).size(), 53u);
}

TEST(PointedWord, RequiresPointedAlphabet) {
  EXPECT_THROW(PointedWord(HeapWord::generator(base(), 0)), InputError);
}
