#include <gtest/gtest.h>

#include "heapgr/catalog.hpp"
#include "heapgr/errors.hpp"
#include "heapgr/finite.hpp"

using namespace heapgr;

namespace {

FiniteHeap first_argument_heap() {
  std::vector<Element> table(8);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b)
      for (Element c = 0; c < 2; ++c) table[(a * 2 + b) * 2 + c] = a;
  return FiniteHeap(2, table);
}

}  // namespace

TEST(HeapAxioms, CyclicThreePasses) {
  EXPECT_TRUE(verify_heap_axioms(associated_heap(cyclic_group(3))).passed());
}

TEST(HeapAxioms, SingletonPasses) {
  EXPECT_TRUE(verify_heap_axioms(FiniteHeap::singleton()).passed());
  EXPECT_TRUE(verify_para_associativity(FiniteHeap::singleton()).passed());
  EXPECT_TRUE(is_abelian(FiniteHeap::singleton()));
}

TEST(HeapAxioms, FirstArgumentTableFailsMalcevAtZeroOne) {
  const AxiomReport report = verify_heap_axioms(first_argument_heap());
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].law, HeapLaw::malcev);
  EXPECT_EQ(report.violations[0].witness, (std::vector<Element>{0, 1}));
}

TEST(HeapAxioms, ParaAssociativityOnZ4) {
  EXPECT_TRUE(verify_para_associativity(associated_heap(cyclic_group(4))).passed());
}

TEST(HeapAxioms, AbelianOnlyForCommutativeGroups) {
  EXPECT_TRUE(is_abelian(associated_heap(cyclic_group(5))));
  const FiniteHeap s3 = associated_heap(symmetric_group(3));
  EXPECT_FALSE(is_abelian(s3));
  const auto witness = abelian_violation(s3);
  ASSERT_TRUE(witness.has_value());
  const auto [a, b, c] = *witness;
  EXPECT_NE(s3(a, b, c), s3(c, b, a));
}

TEST(HeapAxioms, DetectsBrokenAssociativity) {
  // [a,b,c] = a - b - c on Z3 satisfies neither law.
  std::vector<Element> table(27);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b)
      for (Element c = 0; c < 3; ++c) table[(a * 3 + b) * 3 + c] = (a + 6 - b - c) % 3;
  const AxiomReport report = verify_heap_axioms(FiniteHeap(3, table));
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.violations.front().law, HeapLaw::associativity);
}

TEST(AssociatedHeap, Z4Example) {
  EXPECT_EQ(associated_heap(cyclic_group(4))(3, 1, 2), 0u);
}

TEST(AssociatedHeap, TrivialGroupGivesSingleton) {
  EXPECT_EQ(associated_heap(FiniteGroup::trivial()), FiniteHeap::singleton());
}

TEST(AssociatedHeap, S3IsANonAbelianHeap) {
  const FiniteHeap h = associated_heap(symmetric_group(3));
  EXPECT_TRUE(verify_heap_axioms(h).passed());
  EXPECT_FALSE(is_abelian(h));
}

TEST(Retract, AtIdentityRecoversTheGroup) {
  EXPECT_EQ(retract(associated_heap(cyclic_group(4)), 0), cyclic_group(4));
}

TEST(Retract, AtOneIsIsomorphicViaRightTranslation) {
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup r = retract(associated_heap(z4), 1);
  EXPECT_EQ(r.identity(), 1u);
  // x -> x + 1 by hand.
  EXPECT_TRUE(is_isomorphism(FiniteMap(4, 4, {1, 2, 3, 0}), z4, r));
}

TEST(Retract, SingletonGivesTrivialGroup) {
  EXPECT_EQ(retract(FiniteHeap::singleton(), 0), FiniteGroup::trivial());
  EXPECT_THROW(retract(FiniteHeap::singleton(), 1), InputError);
}

TEST(Groups, RejectsNonGroupTables) {
  EXPECT_THROW(FiniteGroup(2, {0, 0, 0, 0}), DomainError);
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 2}), InputError);
  const auto violation = verify_group_laws(2, {1, 1, 1, 1});
  ASSERT_TRUE(violation.has_value());
}

TEST(Groups, CatalogOrders) {
  EXPECT_EQ(symmetric_group(3).size(), 6u);
  EXPECT_EQ(dihedral_group(4).size(), 8u);
  EXPECT_EQ(quaternion_group().size(), 8u);
  EXPECT_EQ(alternating_group(4).size(), 12u);
  EXPECT_EQ(core_catalog().size(), 11u);
  // Q8 has a unique element of order 2; D4 has five.
  auto involutions = [](const FiniteGroup& g) {
    int n = 0;
    for (Element x = 0; x < g.size(); ++x) n += x != g.identity() && g(x, x) == g.identity();
    return n;
  };
  EXPECT_EQ(involutions(quaternion_group()), 1);
  EXPECT_EQ(involutions(dihedral_group(4)), 5);
  EXPECT_FALSE(find_isomorphism(quaternion_group(), dihedral_group(4)).has_value());
}

TEST(HeapHoms, IdentityAndConstantMaps) {
  const FiniteHeap z4 = associated_heap(cyclic_group(4));
  const FiniteHeap s3 = associated_heap(symmetric_group(3));
  EXPECT_TRUE(check_heap_hom(FiniteMap::identity(4), z4, z4));
  for (Element c = 0; c < 6; ++c)
    EXPECT_TRUE(check_heap_hom(FiniteMap::constant(4, 6, c), z4, s3));
}

TEST(HeapHoms, NonStructureMapHasWitness) {
  const FiniteHeap z4 = associated_heap(cyclic_group(4));
  const FiniteMap swap01(4, 4, {1, 0, 2, 3});
  EXPECT_FALSE(check_heap_hom(swap01, z4, z4));
  const auto witness = heap_hom_violation(swap01, z4, z4);
  ASSERT_TRUE(witness.has_value());
  const auto [a, b, c] = *witness;
  EXPECT_NE(swap01(z4(a, b, c)), z4(swap01(a), swap01(b), swap01(c)));
}

TEST(GroupHoms, Z4Examples) {
  const FiniteGroup z4 = cyclic_group(4);
  EXPECT_TRUE(check_group_hom(FiniteMap::identity(4), z4, z4));
  const FiniteMap twice(4, 4, {0, 2, 0, 2});
  EXPECT_TRUE(check_group_hom(twice, z4, z4));
  EXPECT_TRUE(check_heap_hom(twice, associated_heap(z4), associated_heap(z4)));
  const FiniteMap shift(4, 4, {1, 2, 3, 0});
  EXPECT_FALSE(check_group_hom(shift, z4, z4));
  EXPECT_TRUE(check_heap_hom(shift, associated_heap(z4), associated_heap(z4)));
}

TEST(GroupHoms, EnumerationCounts) {
  // |Hom(Zm, Zn)| = gcd(m, n); |Hom(S3, Z2)| = 2; |Hom(Z2, S3)| = 4.
  EXPECT_EQ(enumerate_group_homs(cyclic_group(4), cyclic_group(6)).size(), 2u);
  EXPECT_EQ(enumerate_group_homs(cyclic_group(6), cyclic_group(6)).size(), 6u);
  EXPECT_EQ(enumerate_group_homs(symmetric_group(3), cyclic_group(2)).size(), 2u);
  EXPECT_EQ(enumerate_group_homs(cyclic_group(2), symmetric_group(3)).size(), 4u);
  // Heap homs H(Zm) -> H(Zn) are translates of group homs: n * gcd(m, n).
  EXPECT_EQ(enumerate_heap_homs(associated_heap(cyclic_group(2)),
                                associated_heap(cyclic_group(4))).size(), 8u);
}

TEST(SubHeaps, NormalityExamples) {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteHeap h = associated_heap(s3);
  EXPECT_TRUE(is_normal_subheap(h, SubsetSpec(6, {0, 1, 2, 3, 4, 5}), 3));
  EXPECT_TRUE(is_normal_subheap(h, SubsetSpec(6, {s3.identity()}), s3.identity()));
  // A transposition together with the identity.
  Element transposition = 0;
  for (Element x = 0; x < 6; ++x)
    if (x != s3.identity() && s3(x, x) == s3.identity()) {
      transposition = x;
      break;
    }
  const SubsetSpec sub(6, {s3.identity(), transposition});
  EXPECT_TRUE(is_subheap(h, sub));
  EXPECT_FALSE(is_normal_subheap(h, sub, s3.identity()));
  EXPECT_FALSE(is_normal_subheap(h, sub, transposition));
}

TEST(SubHeaps, NormalityRequiresBasepointInSubset) {
  const FiniteHeap h = associated_heap(cyclic_group(4));
  EXPECT_THROW(is_normal_subheap(h, SubsetSpec(4, {0, 2}), 1), DomainError);
  EXPECT_THROW(is_normal_subheap(h, SubsetSpec(4, {0, 1}), 0), DomainError);
}

TEST(SubsetSpec, RejectsBadMembers) {
  EXPECT_THROW(SubsetSpec(3, {0, 3}), InputError);
  EXPECT_THROW(SubsetSpec(3, {1, 1}), InputError);
  EXPECT_EQ(SubsetSpec(3, {2, 0}).members(), (std::vector<Element>{0, 2}));
}

TEST(Quotients, WholeCarrierGivesSingleton) {
  const FiniteHeap h = associated_heap(symmetric_group(3));
  const HeapQuotient q = quotient(h, SubsetSpec(6, {0, 1, 2, 3, 4, 5}), 2);
  EXPECT_EQ(q.heap, FiniteHeap::singleton());
  EXPECT_EQ(q.projection, FiniteMap::constant(6, 1, 0));
}

TEST(Quotients, Z4ByEvens) {
  const FiniteHeap h = associated_heap(cyclic_group(4));
  const HeapQuotient q = quotient(h, SubsetSpec(4, {0, 2}), 0);
  EXPECT_EQ(q.heap, associated_heap(cyclic_group(2)));
  EXPECT_EQ(q.projection, FiniteMap(4, 2, {0, 1, 0, 1}));
  EXPECT_TRUE(check_heap_hom(q.projection, h, q.heap));
  // Same partition from the other basepoint.
  EXPECT_EQ(quotient(h, SubsetSpec(4, {0, 2}), 2).projection, q.projection);
}

TEST(Quotients, BySingletonIsARelabelling) {
  const FiniteHeap h = associated_heap(dihedral_group(4));
  for (Element e = 0; e < 8; ++e) {
    const HeapQuotient q = quotient(h, SubsetSpec(8, {e}), e);
    ASSERT_EQ(q.heap.size(), 8u);
    const auto inverse = inverse_map(q.projection);
    ASSERT_TRUE(inverse.has_value());
    EXPECT_TRUE(check_heap_hom(q.projection, h, q.heap));
    EXPECT_TRUE(check_heap_hom(*inverse, q.heap, h));
  }
}

TEST(Quotients, NonNormalThrows) {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteHeap h = associated_heap(s3);
  for (Element x = 0; x < 6; ++x)
    if (x != s3.identity() && s3(x, x) == s3.identity()) {
      EXPECT_THROW(quotient(h, SubsetSpec(6, {s3.identity(), x}), x), DomainError);
      break;
    }
}

TEST(Groups, NormalClosureAndQuotient) {
  const FiniteGroup z4 = cyclic_group(4);
  EXPECT_EQ(normal_closure(z4, {2}).members(), (std::vector<Element>{0, 2}));
  EXPECT_EQ(normal_closure(z4, {1}).size(), 4u);
  const GroupQuotient q = quotient_group(z4, normal_closure(z4, {2}));
  EXPECT_EQ(q.group, cyclic_group(2));
  // In S3 the normal closure of a transposition is everything.
  const FiniteGroup s3 = symmetric_group(3);
  for (Element x = 0; x < 6; ++x)
    if (x != s3.identity() && s3(x, x) == s3.identity()) {
      EXPECT_EQ(normal_closure(s3, {x}).size(), 6u);
      break;
    }
}

TEST(Maps, ComposeAndInverse) {
  const FiniteMap f(3, 3, {1, 2, 0});
  EXPECT_EQ(compose(f, f), FiniteMap(3, 3, {2, 0, 1}));
  EXPECT_EQ(*inverse_map(f), FiniteMap(3, 3, {2, 0, 1}));
  EXPECT_FALSE(inverse_map(FiniteMap(2, 2, {0, 0})).has_value());
  EXPECT_THROW(FiniteMap(2, 2, {0, 2}), InputError);
}
