#include <gtest/gtest.h>

#include "heapgr/catalog.hpp"
#include "heapgr/errors.hpp"
#include "heapgr/universal.hpp"

using namespace heapgr;

namespace {

FiniteHeap hz(std::size_t n) { return associated_heap(cyclic_group(n)); }

}  // namespace

TEST(UniversalGroup, SingletonModelIsInfiniteCyclic) {
  const UniversalGroup u = gr_object(FiniteHeap::singleton());
  EXPECT_EQ(u.base().size(), 1u);
  EXPECT_EQ(iota(u, 0), u.tau());
  UgElement x = u.identity();
  for (int k = 0; k < 5; ++k) x = ug_mul(u, x, u.tau());
  EXPECT_EQ(u.format(x), "t^5");
  EXPECT_EQ(u.format(ug_inv(u, x)), "t^-5");
}

TEST(UniversalGroup, Z2Model) {
  const UniversalGroup u = gr_object(hz(2), 0);
  EXPECT_EQ(u.format(u.identity()), "1");
  EXPECT_EQ(u.format(iota(u, 0)), "t");
  EXPECT_EQ(u.format(iota(u, 1)), "a1 t");
  // iota(1) iota(0)^-1 iota(1) = iota([1,0,1]) = iota(0).
  EXPECT_EQ(ug_mul(u, ug_mul(u, iota(u, 1), ug_inv(u, iota(u, 0))), iota(u, 1)), iota(u, 0));
  EXPECT_EQ(u.format(ug_mul(u, u.tau(), u.tau())), "t^2");
  const UgElement sq = ug_mul(u, iota(u, 1), iota(u, 1));
  EXPECT_EQ(sq.syllables.size(), 4u);
  EXPECT_EQ(u.format(sq), "a1 t a1 t");
  EXPECT_NE(iota(u, 0), iota(u, 1));
}

TEST(UniversalGroup, IotaAtBasepointIsTau) {
  const FiniteHeap h = associated_heap(symmetric_group(3));
  for (Element e0 = 0; e0 < 6; ++e0) EXPECT_EQ(gr_object(h, e0).iota(e0), gr_object(h, e0).tau());
}

TEST(UniversalGroup, NormalizeMergesAndDrops) {
  const UniversalGroup u = gr_object(hz(3), 0);
  const UgElement x = u.normalize({Syllable::base(1), Syllable::base(2), Syllable::tau(2),
                                   Syllable::tau(-1), Syllable::base(0), Syllable::base(2)});
  EXPECT_EQ(u.format(x), "t a2");
  EXPECT_TRUE(u.is_normal_form(x));
  EXPECT_FALSE(u.is_normal_form({{Syllable::tau(1), Syllable::tau(1)}}));
  EXPECT_THROW(u.validate({{Syllable::base(0)}}), DomainError);
  EXPECT_THROW(u.validate({{Syllable::base(7)}}), DomainError);
}

TEST(UniversalGroup, RejectsNonHeaps) {
  std::vector<Element> table(8);
  for (Element a = 0; a < 2; ++a)
    for (Element bc = 0; bc < 4; ++bc) table[a * 4 + bc] = a;
  EXPECT_THROW(UniversalGroup(FiniteHeap(2, table), 0), DomainError);
}

TEST(UniversalExtension, ConstantMapCollapses) {
  const UniversalGroup u = gr_object(hz(3), 1);
  const FiniteGroup s3 = symmetric_group(3);
  for (Element s0 = 0; s0 < 6; ++s0) {
    const UniversalHom ext = universal_extension(u, FiniteMap::constant(3, 6, s0), s3);
    EXPECT_EQ(ext(u.tau()), s0);
    for (Element h = 0; h < 3; ++h) EXPECT_EQ(ext(u.iota(h)), s0);
  }
}

TEST(UniversalExtension, IdentityGivesCounit) {
  const FiniteGroup g = dihedral_group(4);
  const UniversalGroup u = gr_object(associated_heap(g), g.identity());
  const UniversalHom counit = universal_extension(u, FiniteMap::identity(8), g);
  for (Element h = 0; h < 8; ++h) EXPECT_EQ(counit(u.iota(h)), h);
}

TEST(UniversalExtension, RejectsNonHoms) {
  const UniversalGroup u = gr_object(hz(3), 0);
  EXPECT_THROW(universal_extension(u, FiniteMap(3, 3, {0, 0, 1}), cyclic_group(3)), DomainError);
}

TEST(Adjunction, TrivialHomGivesConstantIdentity) {
  const UniversalGroup u = gr_object(hz(3), 0);
  const FiniteGroup s3 = symmetric_group(3);
  const UniversalHom trivial(u, s3, FiniteMap::constant(3, 6, s3.identity()), s3.identity());
  EXPECT_EQ(adjunction_phi(u, trivial), FiniteMap::constant(3, 6, s3.identity()));
}

TEST(Adjunction, CountsForZ2IntoZ2) {
  // Hom(Z2, Z2) has 2 elements, times 2 choices for t; heap homs H(Z2) -> H(Z2): 4.
  const UniversalGroup u = gr_object(hz(2), 0);
  EXPECT_EQ(enumerate_universal_homs(u, cyclic_group(2)).size(), 4u);
  EXPECT_EQ(enumerate_heap_homs(hz(2), hz(2)).size(), 4u);
}

TEST(GrMorphism, IdentityAndConstant) {
  const UniversalGroup u = gr_object(hz(3), 2);
  const GrMorphism id = gr_morphism(u, u, FiniteMap::identity(3));
  const UgElement x = u.normalize({Syllable::base(1), Syllable::tau(-2), Syllable::base(2)});
  EXPECT_EQ(id(x), x);
  const UniversalGroup v = gr_object(hz(2), 0);
  const GrMorphism c = gr_morphism(u, v, FiniteMap::constant(3, 2, 1));
  for (Element h = 0; h < 3; ++h) EXPECT_EQ(c(u.iota(h)), v.iota(1));
}

TEST(CoproductMap, CounitAndConstantCases) {
  const FiniteHeap h = hz(4);
  const UniversalGroup u = gr_object(h, 0);
  const CoproductMap counit = coproduct_map(u, h, FiniteMap::identity(4), 0);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(counit(u.iota(x)), x);
  EXPECT_EQ(counit(u.identity()), 0u);
  const CoproductMap constant = coproduct_map(u, h, FiniteMap::constant(4, 4, 3), 3);
  const UgElement x = u.normalize({Syllable::base(1), Syllable::tau(5), Syllable::base(3)});
  EXPECT_EQ(constant(x), 3u);
  EXPECT_EQ(constant(u.tau()), 3u);
}

TEST(Monadicity, ReflectsIso) {
  const FiniteGroup z4 = cyclic_group(4);
  EXPECT_TRUE(reflects_iso(FiniteMap::identity(4), z4, z4));
  EXPECT_FALSE(reflects_iso(FiniteMap(4, 4, {0, 2, 0, 2}), z4, z4));
  EXPECT_TRUE(reflects_iso(FiniteMap(4, 4, {0, 3, 2, 1}), z4, z4));
  EXPECT_THROW(reflects_iso(FiniteMap(4, 4, {1, 2, 3, 0}), z4, z4), DomainError);
}

TEST(Monadicity, EqualPairCoequalizesToCodomain) {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteHeap h = associated_heap(s3);
  const FiniteMap id = FiniteMap::identity(6);
  const SplitPairData data(s3, s3, id, id, h, id, id, id);
  const CoequalizerReport report = split_coequalizer(data);
  EXPECT_EQ(report.coequalizer.quotient.size(), 6u);
  EXPECT_TRUE(report.coequalizes);
  EXPECT_TRUE(report.heap_matches_quotient);
  EXPECT_TRUE(report.comparison_is_iso);
}

TEST(Monadicity, Z4NegationPairHasNoHeapSplitting) {
  // g s = t h with s = id would force g(1) = t(h(1)) = t(h(3)) = g(3).
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteMap f = FiniteMap::identity(4), g(4, 4, {0, 3, 2, 1});
  EXPECT_THROW(SplitPairData(z4, z4, f, g, hz(2), FiniteMap(4, 2, {0, 1, 0, 1}),
                             FiniteMap(2, 4, {0, 1}), FiniteMap::identity(4)),
               DomainError);
}

TEST(Monadicity, Z4NegationPairCoequalizerIsZ2) {
  const FiniteGroup z4 = cyclic_group(4);
  const Coequalizer c = coequalizer(z4, z4, FiniteMap::identity(4), FiniteMap(4, 4, {0, 3, 2, 1}));
  EXPECT_EQ(c.kernel.members(), (std::vector<Element>{0, 2}));
  EXPECT_EQ(c.quotient, cyclic_group(2));
  EXPECT_EQ(c.projection, FiniteMap(4, 2, {0, 1, 0, 1}));
  EXPECT_EQ(associated_heap(c.quotient), quotient(hz(4), c.kernel, 0).heap);
}
