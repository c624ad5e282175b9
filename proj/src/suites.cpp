#include "heapgr/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "heapgr/errors.hpp"
#include "heapgr/free_group.hpp"
#include "heapgr/free_heap.hpp"
#include "heapgr/oracles.hpp"
#include "heapgr/universal.hpp"

namespace heapgr::verify {
namespace {

using oracle::draw;
using oracle::Rng;

// Counts cases and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void pass() { ++cases_; }
  void fail(const std::string& why) {
    ++cases_;
    if (!failure_) failure_ = why;
  }
  void expect(bool ok, const std::string& why) { ok ? pass() : fail(why); }
  // Defers building the message until a failure.
  template <typename Describe>
  void expect_lazy(bool ok, Describe&& describe) {
    ok ? pass() : fail(describe());
  }
  bool failed() const { return failure_.has_value(); }

  Check done(const std::string& extra = {}) const {
    std::ostringstream detail;
    if (failure_) {
      detail << *failure_;
    } else {
      detail << cases_ << " cases";
      if (!extra.empty()) detail << "; " << extra;
    }
    return {name_, !failure_, detail.str()};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::optional<std::string> failure_;
};

template <typename Body>
Check guarded(const std::string& name, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string str(const std::vector<Element>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  out << ']';
  return out.str();
}

std::string letters_str(const std::vector<Letter>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

std::vector<Element> reversed_labels(std::size_t n) {
  std::vector<Element> perm(n);
  for (Element x = 0; x < n; ++x) perm[x] = n - 1 - x;
  return perm;
}

bool is_commutative(const FiniteGroup& g) {
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = 0; b < g.size(); ++b)
      if (g(a, b) != g(b, a)) return false;
  return true;
}

std::vector<CatalogEntry> small_groups(std::size_t max_size) {
  return extended_catalog(max_size);
}

std::vector<SubsetSpec> subheaps_of(const FiniteHeap& h) {
  std::vector<SubsetSpec> out;
  const std::size_t n = h.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x)
      if (mask >> x & 1u) members.push_back(x);
    SubsetSpec s(n, std::move(members));
    if (is_subheap(h, s)) out.push_back(std::move(s));
  }
  return out;
}

HeapWord random_raw_word(const AlphabetPtr& alphabet, std::size_t max_length, Rng& rng,
                         std::vector<Letter>* raw_out = nullptr) {
  const std::size_t length = 2 * draw(rng, (max_length + 1) / 2) + 1;
  std::vector<Letter> raw(length);
  for (auto& letter : raw) letter = static_cast<Letter>(draw(rng, alphabet->size()));
  if (raw_out) *raw_out = raw;
  return reduce(alphabet, raw);
}

}  // namespace

bool all_passed(const Checks& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::pair<std::string, FiniteHeap>> catalog_heaps(
    const std::vector<CatalogEntry>& groups) {
  std::vector<std::pair<std::string, FiniteHeap>> out;
  for (const auto& entry : groups) {
    FiniteHeap h = associated_heap(entry.group);
    out.emplace_back("H(" + entry.name + ")", h);
    if (h.size() > 1)
      out.emplace_back("H(" + entry.name + ") relabelled",
                       oracle::relabel(h, reversed_labels(h.size())));
  }
  return out;
}

// ---------------------------------------------------------------------------

Checks axiom_checks(const std::vector<CatalogEntry>& groups) {
  Checks out;
  out.push_back(guarded("heap axioms on associated heaps", [&] {
    Tally t("heap axioms on associated heaps");
    for (const auto& entry : groups) {
      const auto report = verify_heap_axioms(associated_heap(entry.group));
      t.expect_lazy(report.passed(), [&] {
        return entry.name + ": " + describe(report.violations.front());
      });
    }
    return t.done(std::to_string(groups.size()) + " groups, all quintuples");
  }));
  out.push_back(guarded("para-associativity on associated heaps", [&] {
    Tally t("para-associativity on associated heaps");
    for (const auto& entry : groups) {
      const auto report = verify_para_associativity(associated_heap(entry.group));
      t.expect_lazy(report.passed(), [&] {
        return entry.name + ": " + describe(report.violations.front());
      });
    }
    return t.done();
  }));
  out.push_back(guarded("Abelian heap iff commutative group", [&] {
    Tally t("Abelian heap iff commutative group");
    for (const auto& entry : groups)
      t.expect(is_abelian(associated_heap(entry.group)) == is_commutative(entry.group),
               entry.name + ": Abelianness of the heap disagrees with the group");
    return t.done();
  }));
  return out;
}

Checks round_trip_checks(const std::vector<CatalogEntry>& groups) {
  Checks out;
  out.push_back(guarded("retract(H(G), e) isomorphic to G via x -> x e", [&] {
    Tally t("retract(H(G), e) isomorphic to G via x -> x e");
    for (const auto& entry : groups) {
      const FiniteGroup& g = entry.group;
      const FiniteHeap h = associated_heap(g);
      for (Element e = 0; e < g.size(); ++e) {
        const FiniteGroup r = retract(h, e);
        std::vector<Element> image(g.size());
        for (Element x = 0; x < g.size(); ++x) image[x] = g(x, e);
        const FiniteMap candidate(g.size(), g.size(), std::move(image));
        t.expect(r.identity() == e && is_isomorphism(candidate, g, r),
                 entry.name + ": x -> x e is not an isomorphism at e=" + std::to_string(e));
      }
    }
    return t.done();
  }));
  out.push_back(guarded("associated_heap(retract(H, e)) = H", [&] {
    Tally t("associated_heap(retract(H, e)) = H");
    for (const auto& [name, h] : catalog_heaps(groups))
      for (Element e = 0; e < h.size(); ++e)
        t.expect(associated_heap(retract(h, e)) == h,
                 name + ": table differs at e=" + std::to_string(e));
    return t.done();
  }));
  return out;
}

Checks subheap_checks(const std::vector<CatalogEntry>& groups) {
  Checks out;
  out.push_back(guarded("normal sub-heap iff normal subgroup of the retract", [&] {
    Tally t("normal sub-heap iff normal subgroup of the retract");
    for (const auto& [name, h] : catalog_heaps(groups)) {
      if (h.size() > 8) continue;
      for (const auto& s : subheaps_of(h))
        for (Element e : s.members())
          t.expect(is_normal_subheap(h, s, e) == is_normal_subgroup(retract(h, e), s),
                   name + ": normality disagrees for S=" + str(s.members()) +
                       " e=" + std::to_string(e));
    }
    return t.done();
  }));
  out.push_back(guarded("quotient projection is a surjective heap hom, partition independent of e", [&] {
    Tally t("quotient projection is a surjective heap hom, partition independent of e");
    for (const auto& [name, h] : catalog_heaps(groups)) {
      if (h.size() > 8) continue;
      for (const auto& s : subheaps_of(h)) {
        const Element first = s.members().front();
        if (!is_normal_subheap(h, s, first)) continue;
        const auto q = quotient(h, s, first);
        std::set<Element> hit(q.projection.image().begin(), q.projection.image().end());
        t.expect(verify_heap_axioms(q.heap).passed() &&
                     check_heap_hom(q.projection, h, q.heap) &&
                     hit.size() == q.heap.size(),
                 name + ": bad quotient by " + str(s.members()));
        for (Element e : s.members())
          t.expect(coset_labels(h, s, e) == q.projection,
                   name + ": partition depends on e for S=" + str(s.members()));
      }
    }
    return t.done();
  }));
  out.push_back(guarded("group homs are heap homs; heap homs are group homs iff unital", [&] {
    Tally t("group homs are heap homs; heap homs are group homs iff unital");
    for (const auto& a : groups)
      for (const auto& b : groups) {
        if (a.group.size() > 4 || b.group.size() > 4) continue;
        const auto ha = associated_heap(a.group), hb = associated_heap(b.group);
        for (const auto& f : enumerate_group_homs(a.group, b.group))
          t.expect(check_heap_hom(f, ha, hb), a.name + "->" + b.name + ": group hom " +
                                                  str(f.image()) + " is not a heap hom");
        for (const auto& f : enumerate_heap_homs(ha, hb))
          t.expect(check_group_hom(f, a.group, b.group) ==
                       (f(a.group.identity()) == b.group.identity()),
                   a.name + "->" + b.name + ": heap hom " + str(f.image()));
      }
    return t.done();
  }));
  out.push_back(guarded("constant maps are heap homs", [&] {
    Tally t("constant maps are heap homs");
    const auto heaps = catalog_heaps(groups);
    for (const auto& [na, ha] : heaps)
      for (const auto& [nb, hb] : heaps) {
        if (ha.size() > 6 || hb.size() > 6) continue;
        for (Element c = 0; c < hb.size(); ++c)
          t.expect(check_heap_hom(FiniteMap::constant(ha.size(), hb.size(), c), ha, hb),
                   na + "->" + nb + ": constant " + std::to_string(c));
      }
    return t.done();
  }));
  return out;
}

// ---------------------------------------------------------------------------

Checks free_heap_checks(const FreeHeapBounds& bounds, std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  const std::vector<std::string> names{"x", "y", "z", "w", "v"};
  auto alphabet_of = [&](std::size_t m) {
    return Alphabet::make(std::vector<std::string>(names.begin(), names.begin() + m));
  };

  out.push_back(guarded("reduction confluence", [&] {
    Tally t("reduction confluence");
    std::size_t exhaustive = 0;
    for (std::size_t i = 0; i < bounds.random_words; ++i) {
      const auto alphabet = alphabet_of(1 + draw(rng, bounds.max_alphabet));
      std::vector<Letter> raw;
      const HeapWord stack = random_raw_word(alphabet, bounds.max_raw_length, rng, &raw);
      const auto left = oracle::naive_reduce(raw, oracle::Strategy::leftmost);
      const auto right = oracle::naive_reduce(raw, oracle::Strategy::rightmost);
      const auto random = oracle::naive_reduce(raw, oracle::Strategy::random, &rng);
      bool ok = left == stack.letters() && right == left && random == left;
      if (raw.size() <= 11) {
        ++exhaustive;
        const auto every = oracle::all_reductions(raw);
        ok = ok && every.size() == 1 && *every.begin() == left;
      }
      t.expect_lazy(ok, [&] { return "strategies disagree on raw word " + letters_str(raw); });
    }
    return t.done(std::to_string(exhaustive) + " with every deletion order explored");
  }));

  out.push_back(guarded("heap axioms on the free heap, exhaustive", [&] {
    Tally t("heap axioms on the free heap, exhaustive");
    std::ostringstream sizes;
    auto exhaust = [&](std::size_t m, std::size_t length) {
      const auto words = enumerate_reduced(alphabet_of(m), length);
      sizes << (sizes.tellp() > 0 ? ", " : "") << words.size() << " words over " << m
            << " letters";
      for (const auto& a : words)
        for (const auto& b : words) {
          t.expect(ternary(a, b, b) == a && ternary(b, b, a) == a,
                   "Mal'cev fails at " + a.str() + " | " + b.str());
          for (const auto& c : words) {
            const HeapWord abc = ternary(a, b, c);
            for (const auto& d : words) {
              const HeapWord dcb = ternary(d, c, b);
              for (const auto& e : words) {
                const HeapWord lhs = ternary(abc, d, e);
                t.expect_lazy(lhs == ternary(a, b, ternary(c, d, e)) && lhs == ternary(a, dcb, e),
                              [&] {
                                return "associativity fails at " + a.str() + " | " + b.str() +
                                       " | " + c.str() + " | " + d.str() + " | " + e.str();
                              });
              }
            }
          }
        }
    };
    exhaust(2, bounds.exhaustive_length);
    exhaust(3, 3);
    return t.done(sizes.str() + ", all quintuples");
  }));

  out.push_back(guarded("heap axioms on the free heap, randomized", [&] {
    Tally t("heap axioms on the free heap, randomized");
    const auto alphabet = alphabet_of(3);
    for (std::size_t i = 0; i < bounds.random_tuples; ++i) {
      HeapWord w[5] = {random_raw_word(alphabet, bounds.random_length, rng),
                       random_raw_word(alphabet, bounds.random_length, rng),
                       random_raw_word(alphabet, bounds.random_length, rng),
                       random_raw_word(alphabet, bounds.random_length, rng),
                       random_raw_word(alphabet, bounds.random_length, rng)};
      const HeapWord lhs = ternary(ternary(w[0], w[1], w[2]), w[3], w[4]);
      const bool ok = lhs == ternary(w[0], w[1], ternary(w[2], w[3], w[4])) &&
                      lhs == ternary(w[0], ternary(w[3], w[2], w[1]), w[4]) &&
                      ternary(w[0], w[1], w[1]) == w[0] && ternary(w[1], w[1], w[0]) == w[0];
      // Parity and length bound.
      const HeapWord m = ternary(w[0], w[1], w[2]);
      const bool shape = m.length() % 2 == 1 &&
                         m.length() <= w[0].length() + w[1].length() + w[2].length();
      t.expect_lazy(ok && shape, [&] {
        return "fails at " + w[0].str() + " | " + w[1].str() + " | " + w[2].str() + " | " +
               w[3].str() + " | " + w[4].str();
      });
    }
    return t.done();
  }));

  out.push_back(guarded("enumeration counts m (m-1)^(2k)", [&] {
    Tally t("enumeration counts m (m-1)^(2k)");
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto alphabet = alphabet_of(m);
      const std::size_t bound = m <= 3 ? bounds.enumeration_length : 7;
      const auto words = enumerate_reduced(alphabet, bound);
      std::map<std::size_t, std::uint64_t> per_length;
      for (const auto& w : words) ++per_length[w.length()];
      for (std::size_t len = 1; len <= bound; len += 2)
        t.expect(per_length[len] == reduced_word_count(m, len),
                 "m=" + std::to_string(m) + " length " + std::to_string(len) + ": got " +
                     std::to_string(per_length[len]) + ", expected " +
                     std::to_string(reduced_word_count(m, len)));
      const bool ordered = std::adjacent_find(words.begin(), words.end(),
                                              [](const HeapWord& a, const HeapWord& b) {
                                                return !shortlex_less(a, b);
                                              }) == words.end();
      t.expect(ordered, "m=" + std::to_string(m) + ": not strictly shortlex ordered");
    }
    return t.done();
  }));

  out.push_back(guarded("lift_map is a heap hom", [&] {
    Tally t("lift_map is a heap hom");
    const auto from = alphabet_of(3);
    const auto to = alphabet_of(2);
    for (std::size_t i = 0; i < bounds.random_tuples / 10; ++i) {
      const LetterMap f(from, to,
                        {static_cast<Letter>(draw(rng, 2)), static_cast<Letter>(draw(rng, 2)),
                         static_cast<Letter>(draw(rng, 2))});
      const HeapWord u = random_raw_word(from, bounds.random_length, rng);
      const HeapWord v = random_raw_word(from, bounds.random_length, rng);
      const HeapWord w = random_raw_word(from, bounds.random_length, rng);
      t.expect_lazy(
          lift_map(f, ternary(u, v, w)) == ternary(lift_map(f, u), lift_map(f, v), lift_map(f, w)) &&
              lift_map(f, ternary(u, v, v)) == lift_map(f, u),
          [&] { return "fails at " + u.str() + " | " + v.str() + " | " + w.str(); });
    }
    return t.done();
  }));

  out.push_back(guarded("generators embed injectively", [&] {
    Tally t("generators embed injectively");
    const auto alphabet = alphabet_of(5);
    for (Letter a = 0; a < 5; ++a)
      for (Letter b = 0; b < 5; ++b)
        t.expect((HeapWord::generator(alphabet, a) == HeapWord::generator(alphabet, b)) == (a == b),
                 "generators " + std::to_string(a) + " and " + std::to_string(b));
    return t.done();
  }));
  return out;
}

// ---------------------------------------------------------------------------

Checks free_group_checks(const FreeGroupBounds& bounds, std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  const auto base = Alphabet::make({"x", "y"});
  const auto pointed = Alphabet::with_point(base);
  const auto long_words = enumerate_reduced(pointed, bounds.bijection_length);
  const auto law_words = enumerate_reduced(pointed, bounds.law_length);
  auto pw = [](const HeapWord& w) { return PointedWord(w); };

  out.push_back(guarded("to_classical is a bijection", [&] {
    Tally t("to_classical is a bijection");
    std::set<std::string> images;
    for (const auto& w : long_words) {
      const ClassicalWord c = to_classical(pw(w));
      images.insert(c.str() + "|" + std::to_string(c.length()));
      t.expect(from_classical(c) == pw(w), "from_classical(to_classical(" + w.str() + ")) differs");
    }
    t.expect(images.size() == long_words.size(), "to_classical is not injective");
    const auto classical = enumerate_classical(base, bounds.classical_length);
    for (const auto& c : classical)
      t.expect(to_classical(from_classical(c)) == c,
               "to_classical(from_classical(" + c.str() + ")) differs");
    return t.done(std::to_string(long_words.size()) + " pointed words, " +
                  std::to_string(classical.size()) + " classical words");
  }));

  out.push_back(guarded("to_classical is a homomorphism", [&] {
    Tally t("to_classical is a homomorphism");
    for (const auto& u : law_words)
      for (const auto& v : law_words) {
        const bool ok = to_classical(fg_mul(pw(u), pw(v))) ==
                        classical_mul(to_classical(pw(u)), to_classical(pw(v)));
        t.expect_lazy(ok, [&] { return "fails at " + u.str() + " | " + v.str(); });
      }
    for (std::size_t i = 0; i < bounds.random_pairs; ++i) {
      const PointedWord u = pw(random_raw_word(pointed, bounds.random_length, rng));
      const PointedWord v = pw(random_raw_word(pointed, bounds.random_length, rng));
      t.expect_lazy(to_classical(fg_mul(u, v)) ==
                            classical_mul(to_classical(u), to_classical(v)) &&
                        to_classical(fg_inv(u)) == classical_inv(to_classical(u)),
                    [&] { return "fails at " + u.str() + " | " + v.str(); });
    }
    return t.done();
  }));

  out.push_back(guarded("group laws of the *-retract", [&] {
    Tally t("group laws of the *-retract");
    const PointedWord one = fg_identity(base);
    for (const auto& a : law_words) {
      const PointedWord pa = pw(a);
      t.expect(fg_mul(one, pa) == pa && fg_mul(pa, one) == pa, "identity fails at " + a.str());
      t.expect(fg_mul(pa, fg_inv(pa)) == one && fg_mul(fg_inv(pa), pa) == one,
               "inverse fails at " + a.str());
      for (const auto& b : law_words) {
        const PointedWord ab = fg_mul(pa, pw(b));
        for (const auto& c : law_words) {
          const PointedWord pc = pw(c);
          t.expect_lazy(fg_mul(ab, pc) == fg_mul(pa, fg_mul(pw(b), pc)), [&] {
            return "associativity fails at " + a.str() + " | " + b.str() + " | " + c.str();
          });
        }
      }
    }
    return t.done(std::to_string(law_words.size()) + " words, all triples");
  }));

  out.push_back(guarded("free heap on X ⊔ {*} is generated by H(X) and {*}", [&] {
    Tally t("free heap on X ⊔ {*} is generated by H(X) and {*}");
    // Images of H(X) under the inclusion X -> X ⊔ {*}, and of {*}.
    const LetterMap inclusion(base, pointed, {0, 1});
    const auto xwords = enumerate_reduced(base, bounds.bijection_length);
    std::set<std::vector<Letter>> images;
    for (const auto& w : xwords) {
      const HeapWord image = lift_map(inclusion, w);
      images.insert(image.letters());
      t.expect(image.letters() == w.letters(), "inclusion changes " + w.str());
    }
    t.expect(images.size() == xwords.size(), "H(X) does not embed injectively");

    // Closure of the generators under [-,-,-], bounded by length.
    std::set<std::vector<Letter>> reached;
    std::vector<HeapWord> frontier;
    const std::vector<HeapWord> gens{HeapWord::generator(pointed, 0),
                                     HeapWord::generator(pointed, 1),
                                     HeapWord::generator(pointed, pointed->point())};
    for (const auto& g : gens) {
      reached.insert(g.letters());
      frontier.push_back(g);
    }
    while (!frontier.empty()) {
      std::vector<HeapWord> next;
      for (const auto& w : frontier)
        for (const auto& a : gens)
          for (const auto& b : gens) {
            HeapWord r = ternary(w, a, b);
            if (r.length() <= bounds.bijection_length && reached.insert(r.letters()).second)
              next.push_back(std::move(r));
          }
      frontier = std::move(next);
    }
    t.expect(reached.size() == long_words.size(),
             "generated " + std::to_string(reached.size()) + " of " +
                 std::to_string(long_words.size()) + " words");
    return t.done();
  }));
  return out;
}

// ---------------------------------------------------------------------------

Checks universal_property_checks(std::size_t max_size, std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  const auto groups = small_groups(max_size);
  const auto heaps = catalog_heaps(groups);

  out.push_back(guarded("Gr_*(f) ∘ iota = f for every heap hom f: H -> H(S)", [&] {
    Tally t("Gr_*(f) ∘ iota = f for every heap hom f: H -> H(S)");
    std::size_t homs = 0;
    for (const auto& [hname, h] : heaps)
      for (Element e0 = 0; e0 < h.size(); ++e0) {
        const UniversalGroup u(h, e0);
        for (const auto& s : groups)
          for (const auto& f : enumerate_heap_homs(h, associated_heap(s.group))) {
            ++homs;
            const UniversalHom ext = universal_extension(u, f, s.group);
            t.expect(adjunction_phi(u, ext) == f,
                     hname + " -> H(" + s.name + "): triangle fails for " + str(f.image()));
            for (int k = 0; k < 10; ++k) {
              const UgElement x = oracle::random_element(u, 6, rng);
              const UgElement y = oracle::random_element(u, 6, rng);
              t.expect(ext(u.mul(x, y)) == s.group(ext(x), ext(y)) &&
                           ext(u.inv(x)) == s.group.inverse(ext(x)),
                       hname + " -> H(" + s.name + "): extension is not multiplicative at " +
                           u.format(x) + " , " + u.format(y));
            }
          }
      }
    return t.done(std::to_string(homs) + " heap homs");
  }));

  out.push_back(guarded("uniqueness of the extension", [&] {
    Tally t("uniqueness of the extension");
    for (const auto& [hname, h] : heaps)
      for (Element e0 = 0; e0 < h.size(); ++e0) {
        const UniversalGroup u(h, e0);
        for (const auto& s : groups) {
          const auto all = enumerate_universal_homs(u, s.group);
          for (const auto& f : enumerate_heap_homs(h, associated_heap(s.group))) {
            const UniversalHom ext = universal_extension(u, f, s.group);
            std::size_t matching = 0;
            for (const auto& candidate : all)
              if (adjunction_phi(u, candidate) == f) {
                ++matching;
                t.expect(candidate == ext, hname + ": a second extension of " + str(f.image()));
              }
            t.expect(matching == 1, hname + " -> H(" + s.name + "): " + std::to_string(matching) +
                                        " extensions of " + str(f.image()));
          }
        }
      }
    return t.done();
  }));

  out.push_back(guarded("homs agreeing on iota-images agree everywhere", [&] {
    Tally t("homs agreeing on iota-images agree everywhere");
    for (const auto& [hname, h] : heaps) {
      const UniversalGroup u(h, 0);
      for (const auto& s : groups) {
        const auto all = enumerate_universal_homs(u, s.group);
        for (const auto& a : all)
          for (const auto& b : all) {
            if (adjunction_phi(u, a) != adjunction_phi(u, b)) continue;
            bool same = true;
            for (int k = 0; k < 20 && same; ++k) {
              const UgElement x = oracle::random_element(u, 6, rng);
              same = a(x) == b(x);
            }
            t.expect(same && a == b, hname + " -> " + s.name + ": distinct homs agree on iota");
          }
      }
    }
    return t.done();
  }));

  out.push_back(guarded("coproduct maps: f ⊞ p is determined by f and p", [&] {
    Tally t("coproduct maps: f ⊞ p is determined by f and p");
    for (const auto& [hname, h] : heaps) {
      const UniversalGroup u(h, 0);
      for (const auto& [lname, l] : heaps)
        for (const auto& f : enumerate_heap_homs(h, l))
          for (Element p = 0; p < l.size(); ++p) {
            const CoproductMap cm = coproduct_map(u, l, f, p);
            const std::string where = hname + " -> " + lname + " f=" + str(f.image()) +
                                      " p=" + std::to_string(p);
            t.expect(cm(u.identity()) == p, where + ": identity not sent to p");
            for (Element x = 0; x < h.size(); ++x)
              t.expect(cm(u.iota(x)) == f(x), where + ": disagrees with f on iota");
            for (int k = 0; k < 10; ++k) {
              const UgElement x = oracle::random_element(u, 6, rng);
              const UgElement y = oracle::random_element(u, 6, rng);
              const UgElement z = oracle::random_element(u, 6, rng);
              t.expect(cm(x) == oracle::coproduct_componentwise(u, l, f, p, x),
                       where + ": evaluator differs from componentwise definition at " +
                           u.format(x));
              t.expect(cm(u.mul(u.mul(x, u.inv(y)), z)) == l(cm(x), cm(y), cm(z)),
                       where + ": not a heap hom");
            }
          }
      // Any heap hom out of H(model) factoring through a group hom is the
      // coproduct map of its restrictions.
      for (const auto& s : groups)
        for (const auto& hom : enumerate_universal_homs(u, s.group)) {
          const FiniteHeap hs = associated_heap(s.group);
          const CoproductMap cm =
              coproduct_map(u, hs, adjunction_phi(u, hom), hom(u.identity()));
          for (int k = 0; k < 10; ++k) {
            const UgElement x = oracle::random_element(u, 6, rng);
            t.expect(cm(x) == hom(x), hname + " -> " + s.name + ": restriction does not determine hom");
          }
        }
    }
    return t.done();
  }));

  out.push_back(guarded("iota is an injective heap hom", [&] {
    Tally t("iota is an injective heap hom");
    for (const auto& [hname, h] : heaps)
      for (Element e0 = 0; e0 < h.size(); ++e0) {
        const UniversalGroup u(h, e0);
        t.expect(u.iota(e0) == u.tau(), hname + ": iota(e0) is not t");
        for (Element a = 0; a < h.size(); ++a) {
          for (Element b = 0; b < h.size(); ++b) {
            t.expect((u.iota(a) == u.iota(b)) == (a == b), hname + ": iota not injective");
            for (Element c = 0; c < h.size(); ++c)
              t.expect(u.iota(h(a, b, c)) == u.mul(u.mul(u.iota(a), u.inv(u.iota(b))), u.iota(c)),
                       hname + ": iota not a heap hom at " + str({a, b, c}));
          }
        }
      }
    return t.done();
  }));

  out.push_back(guarded("counit Gr(H(G)) -> G is surjective and splits iota", [&] {
    Tally t("counit Gr(H(G)) -> G is surjective and splits iota");
    for (const auto& s : groups) {
      const FiniteHeap hs = associated_heap(s.group);
      const UniversalGroup u(hs, s.group.identity());
      const UniversalHom counit = universal_extension(u, FiniteMap::identity(s.group.size()), s.group);
      std::set<Element> hit;
      for (Element x = 0; x < s.group.size(); ++x) {
        t.expect(counit(u.iota(x)) == x, s.name + ": counit does not split iota at " + std::to_string(x));
        hit.insert(counit(u.iota(x)));
      }
      t.expect(hit.size() == s.group.size(), s.name + ": counit not surjective");
    }
    return t.done();
  }));

  out.push_back(guarded("free-product arithmetic", [&] {
    Tally t("free-product arithmetic");
    for (const auto& [hname, h] : heaps) {
      const UniversalGroup u(h, 0);
      for (int k = 0; k < 200; ++k) {
        const auto raw = oracle::random_syllables(u, 10, rng);
        const UgElement x = u.normalize(raw);
        const UgElement y = oracle::random_element(u, 6, rng);
        const UgElement z = oracle::random_element(u, 6, rng);
        t.expect(u.is_normal_form(x), hname + ": normalize output not normal");
        t.expect(oracle::random_order_normalize(u, raw, rng) == x,
                 hname + ": normal form depends on merge order for " + u.format(x));
        std::vector<Syllable> reversed(raw.rbegin(), raw.rend());
        std::vector<Syllable> twice = raw;
        twice.insert(twice.end(), raw.begin(), raw.end());
        t.expect(u.normalize(twice) == u.mul(x, x), hname + ": concatenation mismatch");
        t.expect(u.mul(u.mul(x, y), z) == u.mul(x, u.mul(y, z)), hname + ": associativity");
        t.expect(u.mul(x, u.inv(x)) == u.identity() && u.mul(u.inv(x), x) == u.identity(),
                 hname + ": inverse");
        t.expect(u.mul(x, u.identity()) == x && u.mul(u.identity(), x) == x, hname + ": identity");
      }
    }
    return t.done();
  }));
  return out;
}

// ---------------------------------------------------------------------------

Checks adjunction_checks(std::size_t max_size) {
  Checks out;
  const auto groups = small_groups(max_size);
  const auto heaps = catalog_heaps(groups);

  out.push_back(guarded("phi and its inverse are mutually inverse", [&] {
    Tally t("phi and its inverse are mutually inverse");
    for (const auto& [hname, h] : heaps)
      for (Element e0 = 0; e0 < h.size(); ++e0) {
        const UniversalGroup u(h, e0);
        for (const auto& g : groups) {
          for (const auto& f : enumerate_heap_homs(h, associated_heap(g.group)))
            t.expect(adjunction_phi(u, universal_extension(u, f, g.group)) == f,
                     hname + " -> H(" + g.name + "): phi(phi^-1(f)) != f for " + str(f.image()));
          for (const auto& hom : enumerate_universal_homs(u, g.group))
            t.expect(universal_extension(u, adjunction_phi(u, hom), g.group) == hom,
                     hname + " -> " + g.name + ": phi^-1(phi(F)) != F");
        }
      }
    return t.done();
  }));

  out.push_back(guarded("|Grp(Gr(H), G)| = |Heap(H, H(G))|", [&] {
    Tally t("|Grp(Gr(H), G)| = |Heap(H, H(G))|");
    std::ostringstream table;
    for (const auto& [hname, h] : heaps) {
      const UniversalGroup u(h, 0);
      for (const auto& g : groups) {
        // Pairs (hom on A, image of t), with homs on A found by brute force.
        const std::size_t left = oracle::brute_force_group_homs(u.base(), g.group).size() * g.group.size();
        const std::size_t enumerated = enumerate_universal_homs(u, g.group).size();
        const std::size_t right = enumerate_heap_homs(h, associated_heap(g.group)).size();
        t.expect(left == right && enumerated == left,
                 hname + ", " + g.name + ": " + std::to_string(left) + " group homs vs " +
                     std::to_string(right) + " heap homs");
        if (hname.find("relabelled") == std::string::npos)
          table << (table.tellp() > 0 ? ", " : "") << hname << "/" << g.name << "=" << right;
      }
    }
    return t.done(table.str());
  }));

  out.push_back(guarded("naturality in the heap: phi(F ∘ Gr(alpha)) = phi(F) ∘ alpha", [&] {
    Tally t("naturality in the heap: phi(F ∘ Gr(alpha)) = phi(F) ∘ alpha");
    for (const auto& [lname, l] : heaps)
      for (const auto& [hname, h] : heaps) {
        const UniversalGroup ul(l, 0), uh(h, 0);
        for (const auto& alpha : enumerate_heap_homs(l, h)) {
          const GrMorphism gr_alpha = gr_morphism(ul, uh, alpha);
          for (const auto& g : groups)
            for (const auto& hom : enumerate_universal_homs(uh, g.group))
              t.expect(adjunction_phi(ul, compose(hom, gr_alpha, ul)) ==
                           compose(adjunction_phi(uh, hom), alpha),
                       lname + " -> " + hname + " alpha=" + str(alpha.image()) + " into " + g.name);
        }
      }
    return t.done();
  }));

  out.push_back(guarded("naturality in the group: phi(g ∘ F) = H(g) ∘ phi(F)", [&] {
    Tally t("naturality in the group: phi(g ∘ F) = H(g) ∘ phi(F)");
    for (const auto& [hname, h] : heaps) {
      const UniversalGroup u(h, 0);
      for (const auto& g : groups)
        for (const auto& s : groups)
          for (const auto& gmap : enumerate_group_homs(g.group, s.group))
            for (const auto& hom : enumerate_universal_homs(u, g.group))
              t.expect(adjunction_phi(u, compose(gmap, s.group, hom, u)) ==
                           compose(gmap, adjunction_phi(u, hom)),
                       hname + ": " + g.name + " -> " + s.name + " g=" + str(gmap.image()));
    }
    return t.done();
  }));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// (id, e) for an idempotent endomorphism e, split through the image of e.
SplitPairData idempotent_split_pair(const FiniteGroup& g, const FiniteMap& e) {
  std::vector<Element> image;
  for (Element x = 0; x < g.size(); ++x)
    if (e(x) == x) image.push_back(x);
  std::vector<Element> index(g.size(), 0);
  for (Element i = 0; i < image.size(); ++i) index[image[i]] = i;
  const std::size_t k = image.size();
  std::vector<Element> table(k * k);
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) table[i * k + j] = index[g(image[i], image[j])];
  const FiniteGroup sub(k, std::move(table));

  std::vector<Element> h(g.size());
  for (Element x = 0; x < g.size(); ++x) h[x] = index[e(x)];
  return SplitPairData(g, g, FiniteMap::identity(g.size()), e, associated_heap(sub),
                       FiniteMap(g.size(), k, std::move(h)), FiniteMap(k, g.size(), image),
                       FiniteMap::identity(g.size()));
}

}  // namespace

Checks monadicity_checks(const std::vector<CatalogEntry>& groups) {
  Checks out;

  out.push_back(guarded("H reflects isomorphisms", [&] {
    Tally t("H reflects isomorphisms");
    std::size_t isos = 0;
    for (const auto& a : groups)
      for (const auto& b : groups) {
        if (a.group.size() != b.group.size() && a.group.size() > 4) continue;
        const auto ha = associated_heap(a.group), hb = associated_heap(b.group);
        for (const auto& f : enumerate_group_homs(a.group, b.group)) {
          const bool reflected = reflects_iso(f, a.group, b.group);
          const auto inverse = inverse_map(f);
          const bool heap_iso = inverse && check_heap_hom(f, ha, hb) && check_heap_hom(*inverse, hb, ha);
          const bool group_iso = inverse && check_group_hom(*inverse, b.group, a.group);
          isos += reflected;
          t.expect(reflected == is_bijective(f) && reflected == heap_iso && heap_iso == group_iso,
                   a.name + " -> " + b.name + ": " + str(f.image()));
        }
      }
    return t.done(std::to_string(isos) + " isomorphisms");
  }));

  out.push_back(guarded("split_coequalizer on the Z4 pair (id, x -> -x) yields Z2", [&] {
    const std::string name = "split_coequalizer on the Z4 pair (id, x -> -x) yields Z2";
    const FiniteGroup z4 = cyclic_group(4), z2 = cyclic_group(2);
    const FiniteMap f = FiniteMap::identity(4), g(4, 4, {0, 3, 2, 1});
    const FiniteHeap hz4 = associated_heap(z4), hz2 = associated_heap(z2);
    // Search every heap-level (h, t, s) into a 2-element heap for a splitting.
    std::size_t tried = 0;
    std::string last_reason;
    for (const auto& h : enumerate_heap_homs(hz4, hz2))
      for (const auto& tm : enumerate_heap_homs(hz2, hz4))
        for (const auto& s : enumerate_heap_homs(hz4, hz4)) {
          ++tried;
          try {
            const SplitPairData data(z4, z4, f, g, hz2, h, tm, s);
            const auto report = split_coequalizer(data);
            const bool ok = report.coequalizes && report.heap_matches_quotient &&
                            find_isomorphism(report.coequalizer.quotient, z2).has_value();
            return Check{name, ok, ok ? "split data found" : "split data found but report fails"};
          } catch (const DomainError& e) {
            last_reason = e.what();
          }
        }
    return Check{name, false,
                 "no H-split data exists: all " + std::to_string(tried) +
                     " heap-hom triples (h, t, s) into H(Z2) rejected; for any heap H, f∘s = id "
                     "forces s = id, then g∘s = t∘h makes h injective and h∘f = h∘g "
                     "forces f = g, but g(1) = 3"};
  }));

  out.push_back(guarded("coequalizer of (id, x -> -x) on Z4 in Grp is Z2 and H preserves it", [&] {
    Tally t("coequalizer of (id, x -> -x) on Z4 in Grp is Z2 and H preserves it");
    const FiniteGroup z4 = cyclic_group(4);
    const FiniteMap f = FiniteMap::identity(4), g(4, 4, {0, 3, 2, 1});
    const Coequalizer c = coequalizer(z4, z4, f, g);
    t.expect(c.kernel.members() == std::vector<Element>{0, 2}, "kernel is not {0,2}");
    t.expect(find_isomorphism(c.quotient, cyclic_group(2)).has_value(), "quotient is not Z2");
    t.expect(compose(c.projection, f) == compose(c.projection, g), "q∘f != q∘g");
    t.expect(associated_heap(c.quotient) ==
                 quotient(associated_heap(z4), c.kernel, z4.identity()).heap,
             "heap of the quotient differs from the quotient heap");
    return t.done();
  }));

  out.push_back(guarded("split coequalizers of (id, e) for idempotent e are preserved by H", [&] {
    Tally t("split coequalizers of (id, e) for idempotent e are preserved by H");
    std::size_t pairs = 0;
    for (const auto& entry : groups) {
      const FiniteGroup& g = entry.group;
      for (const auto& e : enumerate_group_homs(g, g)) {
        if (compose(e, e) != e) continue;
        ++pairs;
        const SplitPairData data = idempotent_split_pair(g, e);
        const CoequalizerReport report = split_coequalizer(data);
        t.expect(report.coequalizes && report.heap_matches_quotient && report.comparison_is_iso,
                 entry.name + ": e=" + str(e.image()));
      }
    }
    return t.done(std::to_string(pairs) + " split pairs");
  }));
  return out;
}

// ---------------------------------------------------------------------------

Checks functoriality_checks(std::size_t max_size, std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  const auto heaps = catalog_heaps(small_groups(max_size));

  out.push_back(guarded("Gr(id) = id", [&] {
    Tally t("Gr(id) = id");
    for (const auto& [hname, h] : heaps)
      for (Element e0 = 0; e0 < h.size(); ++e0) {
        const UniversalGroup u(h, e0);
        const GrMorphism id = gr_morphism(u, u, FiniteMap::identity(h.size()));
        for (Element x = 0; x < h.size(); ++x)
          t.expect(id(u.iota(x)) == u.iota(x), hname + ": Gr(id) moves iota(" + std::to_string(x) + ")");
        for (int k = 0; k < 20; ++k) {
          const UgElement x = oracle::random_element(u, 6, rng);
          t.expect(id(x) == x, hname + ": Gr(id) moves " + u.format(x));
        }
      }
    return t.done();
  }));

  out.push_back(guarded("Gr(f) ∘ iota = iota ∘ f", [&] {
    Tally t("Gr(f) ∘ iota = iota ∘ f");
    for (const auto& [an, a] : heaps)
      for (const auto& [bn, b] : heaps) {
        const UniversalGroup ua(a, 0), ub(b, 0);
        for (const auto& f : enumerate_heap_homs(a, b)) {
          const GrMorphism gf = gr_morphism(ua, ub, f);
          for (Element x = 0; x < a.size(); ++x)
            t.expect(gf(ua.iota(x)) == ub.iota(f(x)), an + " -> " + bn + ": " + str(f.image()));
        }
      }
    return t.done();
  }));

  out.push_back(guarded("Gr(g ∘ f) = Gr(g) ∘ Gr(f)", [&] {
    Tally t("Gr(g ∘ f) = Gr(g) ∘ Gr(f)");
    for (const auto& [an, a] : heaps)
      for (const auto& [bn, b] : heaps)
        for (const auto& [cn, c] : heaps) {
          const UniversalGroup ua(a, 0), ub(b, 0), uc(c, 0);
          const auto fs = enumerate_heap_homs(a, b);
          const auto gs = enumerate_heap_homs(b, c);
          for (const auto& f : fs) {
            const GrMorphism gf = gr_morphism(ua, ub, f);
            for (const auto& g : gs) {
              const GrMorphism gg = gr_morphism(ub, uc, g);
              const GrMorphism ggf = gr_morphism(ua, uc, compose(g, f));
              const std::string where = an + " -> " + bn + " -> " + cn + " f=" + str(f.image()) +
                                        " g=" + str(g.image());
              for (Element x = 0; x < a.size(); ++x)
                t.expect(ggf(ua.iota(x)) == gg(gf(ua.iota(x))), where);
              for (int k = 0; k < 3; ++k) {
                const UgElement x = oracle::random_element(ua, 6, rng);
                t.expect(ggf(x) == gg(gf(x)), where + " at " + ua.format(x));
              }
            }
          }
        }
    return t.done();
  }));

  out.push_back(guarded("constant f collapses iota-images", [&] {
    Tally t("constant f collapses iota-images");
    for (const auto& [an, a] : heaps)
      for (const auto& [bn, b] : heaps) {
        const UniversalGroup ua(a, 0), ub(b, 0);
        for (Element c = 0; c < b.size(); ++c) {
          const GrMorphism gf = gr_morphism(ua, ub, FiniteMap::constant(a.size(), b.size(), c));
          for (Element x = 0; x < a.size(); ++x)
            t.expect(gf(ua.iota(x)) == ub.iota(c), an + " -> " + bn + ": constant " + std::to_string(c));
        }
      }
    return t.done();
  }));
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "axioms",     "round-trips", "subheaps",   "free-heap",     "free-group",
      "universal",  "adjunction",  "monadicity", "functoriality", "all"};
  return names;
}

Checks run_suite(std::string_view name, const SuiteOptions& options) {
  auto size_or = [&](std::size_t fallback) { return options.max_size.value_or(fallback); };
  if (name == "axioms") return axiom_checks(extended_catalog(size_or(12)));
  if (name == "round-trips") return round_trip_checks(extended_catalog(size_or(12)));
  if (name == "subheaps") return subheap_checks(extended_catalog(size_or(8)));
  if (name == "free-heap") {
    FreeHeapBounds bounds;
    if (options.max_size) bounds.max_raw_length = *options.max_size;
    return free_heap_checks(bounds, options.seed);
  }
  if (name == "free-group") {
    FreeGroupBounds bounds;
    if (options.max_size) bounds.bijection_length = *options.max_size;
    return free_group_checks(bounds, options.seed);
  }
  if (name == "universal") return universal_property_checks(size_or(3), options.seed);
  if (name == "adjunction") return adjunction_checks(size_or(3));
  if (name == "monadicity") return monadicity_checks(extended_catalog(size_or(8)));
  if (name == "functoriality") return functoriality_checks(size_or(3), options.seed);
  if (name == "all") {
    Checks all;
    for (const auto& suite : suite_names()) {
      if (suite == "all") continue;
      for (auto& check : run_suite(suite, options)) {
        check.name = suite + ": " + check.name;
        all.push_back(std::move(check));
      }
    }
    return all;
  }
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace heapgr::verify
