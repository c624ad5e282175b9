#include "heapgr/finite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "heapgr/errors.hpp"

namespace heapgr {
namespace {

void check_entries(std::size_t size, const std::vector<Element>& table,
                   std::size_t expected, const char* what) {
  if (size == 0) throw InputError(std::string(what) + ": size must be positive");
  if (table.size() != expected) {
    std::ostringstream out;
    out << what << ": expected " << expected << " entries, got " << table.size();
    throw InputError(out.str());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size) {
      std::ostringstream out;
      out << what << ": entry " << i << " is " << table[i]
          << ", outside 0.." << size - 1;
      throw InputError(out.str());
    }
  }
}

std::string join(const std::vector<Element>& xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteHeap::FiniteHeap(std::size_t size, std::vector<Element> table)
    : size_(size), table_(std::move(table)) {
  check_entries(size_, table_, size_ * size_ * size_, "heap table");
}

FiniteHeap FiniteHeap::singleton() { return FiniteHeap(1, {0}); }

std::optional<GroupViolation> verify_group_laws(
    std::size_t n, const std::vector<Element>& table) {
  if (table.size() != n * n) return GroupViolation{GroupLaw::closure, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) return GroupViolation{GroupLaw::closure, {i / n, i % n}};
  }
  auto m = [&](Element a, Element b) { return table[a * n + b]; };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          return GroupViolation{GroupLaw::associativity, {a, b, c}};

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool neutral = true;
    for (Element x = 0; x < n && neutral; ++x)
      neutral = m(e, x) == x && m(x, e) == x;
    if (neutral) identity = e;
  }
  if (!identity) return GroupViolation{GroupLaw::identity, {}};

  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      found = m(a, b) == *identity && m(b, a) == *identity;
    if (!found) return GroupViolation{GroupLaw::inverse, {a}};
  }
  return std::nullopt;
}

std::string describe(const GroupViolation& violation) {
  switch (violation.law) {
    case GroupLaw::closure:
      return "table entry out of range at " + join(violation.witness);
    case GroupLaw::associativity:
      return "associativity fails at (a,b,c)=" + join(violation.witness);
    case GroupLaw::identity:
      return "no two-sided identity element";
    case GroupLaw::inverse:
      return "element without inverse: " + join(violation.witness);
  }
  return "unknown violation";
}

FiniteGroup::FiniteGroup(std::size_t size, std::vector<Element> table)
    : size_(size), table_(std::move(table)) {
  check_entries(size_, table_, size_ * size_, "group table");
  if (auto violation = verify_group_laws(size_, table_))
    throw DomainError("not a group: " + describe(*violation));
  for (Element e = 0; e < size_; ++e) {
    bool neutral = true;
    for (Element x = 0; x < size_ && neutral; ++x)
      neutral = (*this)(e, x) == x && (*this)(x, e) == x;
    if (neutral) {
      identity_ = e;
      break;
    }
  }
  inverse_.resize(size_);
  for (Element a = 0; a < size_; ++a)
    for (Element b = 0; b < size_; ++b)
      if ((*this)(a, b) == identity_) inverse_[a] = b;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}); }

Element FiniteGroup::power(Element a, long long n) const {
  Element base = n < 0 ? inverse(a) : a;
  unsigned long long k = n < 0 ? -static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  // Orders divide size(), so reduce the exponent first.
  k %= size_;
  Element result = identity_;
  for (unsigned long long i = 0; i < k; ++i) result = (*this)(result, base);
  return result;
}

// ---------------------------------------------------------------------------

SubsetSpec::SubsetSpec(std::size_t parent_size, std::vector<Element> members)
    : parent_size_(parent_size), members_(std::move(members)),
      mask_(parent_size, false) {
  for (Element m : members_) {
    if (m >= parent_size_) {
      std::ostringstream out;
      out << "subset member " << m << " outside 0.." << parent_size_ - 1;
      throw InputError(out.str());
    }
    if (mask_[m]) {
      std::ostringstream out;
      out << "subset member " << m << " listed twice";
      throw InputError(out.str());
    }
    mask_[m] = true;
  }
  std::sort(members_.begin(), members_.end());
}

FiniteMap::FiniteMap(std::size_t domain_size, std::size_t codomain_size,
                     std::vector<Element> image)
    : codomain_size_(codomain_size), image_(std::move(image)) {
  if (image_.size() != domain_size) {
    std::ostringstream out;
    out << "map: expected " << domain_size << " images, got " << image_.size();
    throw InputError(out.str());
  }
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] >= codomain_size_) {
      std::ostringstream out;
      out << "map: image of " << i << " is " << image_[i]
          << ", outside codomain of size " << codomain_size_;
      throw InputError(out.str());
    }
  }
}

FiniteMap FiniteMap::identity(std::size_t size) {
  std::vector<Element> image(size);
  for (Element i = 0; i < size; ++i) image[i] = i;
  return FiniteMap(size, size, std::move(image));
}

FiniteMap FiniteMap::constant(std::size_t domain_size,
                              std::size_t codomain_size, Element value) {
  return FiniteMap(domain_size, codomain_size,
                   std::vector<Element>(domain_size, value));
}

FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner) {
  if (inner.codomain_size() != outer.domain_size())
    throw InputError("compose: codomain of inner map does not match domain of outer map");
  std::vector<Element> image(inner.domain_size());
  for (Element x = 0; x < image.size(); ++x) image[x] = outer(inner(x));
  return FiniteMap(inner.domain_size(), outer.codomain_size(), std::move(image));
}

bool is_bijective(const FiniteMap& f) {
  if (f.domain_size() != f.codomain_size()) return false;
  std::vector<bool> hit(f.codomain_size(), false);
  for (Element y : f.image()) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::optional<FiniteMap> inverse_map(const FiniteMap& f) {
  if (!is_bijective(f)) return std::nullopt;
  std::vector<Element> image(f.domain_size());
  for (Element x = 0; x < f.domain_size(); ++x) image[f(x)] = x;
  return FiniteMap(f.codomain_size(), f.domain_size(), std::move(image));
}

// ---------------------------------------------------------------------------

std::string describe(const LawViolation& violation) {
  switch (violation.law) {
    case HeapLaw::associativity:
      return "associativity [[h1,h2,h3],h4,h5]=[h1,h2,[h3,h4,h5]] fails at "
             "(h1,h2,h3,h4,h5)=" + join(violation.witness);
    case HeapLaw::malcev:
      return "Mal'cev identity [h1,h2,h2]=h1=[h2,h2,h1] fails at (h1,h2)=" +
             join(violation.witness);
    case HeapLaw::para_associativity:
      return "para-associativity [[h1,h2,h3],h4,h5]=[h1,[h4,h3,h2],h5] fails at "
             "(h1,h2,h3,h4,h5)=" + join(violation.witness);
    case HeapLaw::abelian:
      return "[a,b,c]=[c,b,a] fails at (a,b,c)=" + join(violation.witness);
  }
  return "unknown violation";
}

AxiomReport verify_heap_axioms(const FiniteHeap& h) {
  const std::size_t n = h.size();
  AxiomReport report;
  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          const Element abc = h(a, b, c);
          for (Element d = 0; d < n; ++d)
            for (Element e = 0; e < n; ++e)
              if (h(abc, d, e) != h(a, b, h(c, d, e))) {
                report.violations.push_back(
                    {HeapLaw::associativity, {a, b, c, d, e}});
                return;
              }
        }
  }();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (h(a, b, b) != a || h(b, b, a) != a) {
        report.violations.push_back({HeapLaw::malcev, {a, b}});
        return report;
      }
  return report;
}

AxiomReport verify_para_associativity(const FiniteHeap& h) {
  const std::size_t n = h.size();
  AxiomReport report;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element abc = h(a, b, c);
        for (Element d = 0; d < n; ++d) {
          const Element dcb = h(d, c, b);
          for (Element e = 0; e < n; ++e)
            if (h(abc, d, e) != h(a, dcb, e)) {
              report.violations.push_back(
                  {HeapLaw::para_associativity, {a, b, c, d, e}});
              return report;
            }
        }
      }
  return report;
}

std::optional<std::array<Element, 3>> abelian_violation(const FiniteHeap& h) {
  const std::size_t n = h.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (h(a, b, c) != h(c, b, a)) return std::array{a, b, c};
  return std::nullopt;
}

bool is_abelian(const FiniteHeap& heap) { return !abelian_violation(heap); }

// ---------------------------------------------------------------------------

FiniteHeap associated_heap(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<Element> table(n * n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g(a, g.inverse(b));
      for (Element c = 0; c < n; ++c) table[(a * n + b) * n + c] = g(ab, c);
    }
  return FiniteHeap(n, std::move(table));
}

FiniteGroup retract(const FiniteHeap& h, Element e) {
  const std::size_t n = h.size();
  if (e >= n) {
    std::ostringstream out;
    out << "retract: basepoint " << e << " outside 0.." << n - 1;
    throw InputError(out.str());
  }
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = h(a, e, b);
  return FiniteGroup(n, std::move(table));
}

// ---------------------------------------------------------------------------

std::optional<std::array<Element, 3>> heap_hom_violation(
    const FiniteMap& f, const FiniteHeap& src, const FiniteHeap& dst) {
  if (f.domain_size() != src.size() || f.codomain_size() != dst.size())
    throw InputError("heap hom check: map sizes do not match the heaps");
  const std::size_t n = src.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (f(src(a, b, c)) != dst(f(a), f(b), f(c))) return std::array{a, b, c};
  return std::nullopt;
}

bool check_heap_hom(const FiniteMap& f, const FiniteHeap& src,
                    const FiniteHeap& dst) {
  return !heap_hom_violation(f, src, dst);
}

std::optional<std::array<Element, 2>> group_hom_violation(
    const FiniteMap& f, const FiniteGroup& src, const FiniteGroup& dst) {
  if (f.domain_size() != src.size() || f.codomain_size() != dst.size())
    throw InputError("group hom check: map sizes do not match the groups");
  const std::size_t n = src.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (f(src(a, b)) != dst(f(a), f(b))) return std::array{a, b};
  return std::nullopt;
}

bool check_group_hom(const FiniteMap& f, const FiniteGroup& src,
                     const FiniteGroup& dst) {
  return !group_hom_violation(f, src, dst);
}

bool is_isomorphism(const FiniteMap& f, const FiniteGroup& src,
                    const FiniteGroup& dst) {
  return is_bijective(f) && check_group_hom(f, src, dst);
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<bool> reached(g.size(), false);
  reached[g.identity()] = true;
  std::size_t count = 1;
  for (Element x = 0; x < g.size() && count < g.size(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    // Closure of the subgroup generated so far (finite, so products suffice).
    std::deque<Element> frontier;
    for (Element y = 0; y < g.size(); ++y)
      if (reached[y]) frontier.push_back(y);
    while (!frontier.empty()) {
      const Element y = frontier.front();
      frontier.pop_front();
      for (Element s : gens) {
        const Element z = g(y, s);
        if (!reached[z]) {
          reached[z] = true;
          ++count;
          frontier.push_back(z);
        }
      }
    }
  }
  return gens;
}

namespace {

// Extends generator images to a map by breadth-first words in the generators;
// returns nothing if two words for the same element disagree.
std::optional<FiniteMap> extend_from_generators(
    const FiniteGroup& src, const FiniteGroup& dst,
    const std::vector<Element>& gens, const std::vector<Element>& images) {
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> image(src.size(), unset);
  image[src.identity()] = dst.identity();
  std::deque<Element> frontier{src.identity()};
  while (!frontier.empty()) {
    const Element y = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element z = src(y, gens[i]);
      const Element w = dst(image[y], images[i]);
      if (image[z] == unset) {
        image[z] = w;
        frontier.push_back(z);
      } else if (image[z] != w) {
        return std::nullopt;
      }
    }
  }
  FiniteMap f(src.size(), dst.size(), std::move(image));
  if (!check_group_hom(f, src, dst)) return std::nullopt;
  return f;
}

template <typename Visit>
void for_each_assignment(std::size_t slots, std::size_t range, Visit&& visit) {
  std::vector<Element> current(slots, 0);
  while (true) {
    if (!visit(current)) return;
    std::size_t i = slots;
    while (i > 0) {
      --i;
      if (++current[i] < range) break;
      current[i] = 0;
      if (i == 0) return;
    }
    if (slots == 0) return;
  }
}

}  // namespace

std::vector<FiniteMap> enumerate_group_homs(const FiniteGroup& src,
                                            const FiniteGroup& dst) {
  const auto gens = generating_set(src);
  std::vector<FiniteMap> homs;
  for_each_assignment(gens.size(), dst.size(), [&](const std::vector<Element>& images) {
    if (auto f = extend_from_generators(src, dst, gens, images))
      homs.push_back(std::move(*f));
    return true;
  });
  return homs;
}

std::optional<FiniteMap> find_isomorphism(const FiniteGroup& src,
                                          const FiniteGroup& dst) {
  if (src.size() != dst.size()) return std::nullopt;
  const auto gens = generating_set(src);
  std::optional<FiniteMap> found;
  for_each_assignment(gens.size(), dst.size(), [&](const std::vector<Element>& images) {
    if (auto f = extend_from_generators(src, dst, gens, images);
        f && is_bijective(*f)) {
      found = std::move(f);
      return false;
    }
    return true;
  });
  return found;
}

std::vector<FiniteMap> enumerate_heap_homs(const FiniteHeap& src,
                                           const FiniteHeap& dst) {
  std::vector<FiniteMap> homs;
  for_each_assignment(src.size(), dst.size(), [&](const std::vector<Element>& image) {
    FiniteMap f(src.size(), dst.size(), image);
    if (check_heap_hom(f, src, dst)) homs.push_back(std::move(f));
    return true;
  });
  return homs;
}

// ---------------------------------------------------------------------------

bool is_subheap(const FiniteHeap& h, const SubsetSpec& s) {
  if (s.parent_size() != h.size())
    throw InputError("subset does not belong to this heap");
  if (s.size() == 0) return false;
  for (Element a : s.members())
    for (Element b : s.members())
      for (Element c : s.members())
        if (!s.contains(h(a, b, c))) return false;
  return true;
}

bool is_normal_subheap(const FiniteHeap& h, const SubsetSpec& s, Element e) {
  if (!s.contains(e)) throw DomainError("basepoint is not a member of the subset");
  if (!is_subheap(h, s))
    throw DomainError("subset is not a sub-heap: not closed under the ternary operation");
  for (Element x = 0; x < h.size(); ++x)
    for (Element sigma : s.members()) {
      const Element lhs = h(x, e, sigma);
      bool solved = false;
      for (Element other : s.members()) {
        if (h(other, e, x) == lhs) {
          solved = true;
          break;
        }
      }
      if (!solved) return false;
    }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const SubsetSpec& s) {
  if (s.parent_size() != g.size())
    throw InputError("subset does not belong to this group");
  if (!s.contains(g.identity())) return false;
  for (Element a : s.members()) {
    if (!s.contains(g.inverse(a))) return false;
    for (Element b : s.members())
      if (!s.contains(g(a, b))) return false;
  }
  for (Element x = 0; x < g.size(); ++x)
    for (Element a : s.members())
      if (!s.contains(g(g(x, a), g.inverse(x)))) return false;
  return true;
}

SubsetSpec normal_closure(const FiniteGroup& g,
                          const std::vector<Element>& generators) {
  std::vector<bool> in(g.size(), false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  std::deque<Element> frontier{g.identity()};
  auto add = [&](Element z) {
    if (!in[z]) {
      in[z] = true;
      members.push_back(z);
      frontier.push_back(z);
    }
  };
  for (Element x : generators) {
    if (x >= g.size()) throw InputError("normal closure: generator out of range");
    add(x);
  }
  // Closed under products and conjugation; finiteness gives inverses.
  while (!frontier.empty()) {
    const Element y = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(g(y, members[i]));
      add(g(members[i], y));
    }
    for (Element x = 0; x < g.size(); ++x) add(g(g(x, y), g.inverse(x)));
  }
  return SubsetSpec(g.size(), std::move(members));
}

namespace {

FiniteMap label_cosets(const FiniteGroup& g, const SubsetSpec& s) {
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> label(g.size(), unset);
  Element next = 0;
  for (Element a = 0; a < g.size(); ++a) {
    if (label[a] != unset) continue;
    for (Element m : s.members()) label[g(a, m)] = next;
    ++next;
  }
  return FiniteMap(g.size(), next, std::move(label));
}

}  // namespace

FiniteMap coset_labels(const FiniteHeap& h, const SubsetSpec& s, Element e) {
  if (!s.contains(e)) throw DomainError("basepoint is not a member of the subset");
  return label_cosets(retract(h, e), s);
}

HeapQuotient quotient(const FiniteHeap& h, const SubsetSpec& s, Element e) {
  if (!is_normal_subheap(h, s, e))
    throw DomainError("quotient: subset is not a normal sub-heap");
  FiniteMap projection = coset_labels(h, s, e);
  const std::size_t q = projection.codomain_size();
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> table(q * q * q, unset);
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      for (Element c = 0; c < h.size(); ++c) {
        Element& slot =
            table[(projection(a) * q + projection(b)) * q + projection(c)];
        const Element value = projection(h(a, b, c));
        if (slot == unset) {
          slot = value;
        } else if (slot != value) {
          throw DomainError("quotient: induced operation is not well defined");
        }
      }
  return {FiniteHeap(q, std::move(table)), std::move(projection)};
}

GroupQuotient quotient_group(const FiniteGroup& g, const SubsetSpec& n) {
  if (!is_normal_subgroup(g, n))
    throw DomainError("quotient group: subset is not a normal subgroup");
  FiniteMap projection = label_cosets(g, n);
  const std::size_t q = projection.codomain_size();
  std::vector<Element> table(q * q);
  for (Element a = 0; a < g.size(); ++a)
    for (Element b = 0; b < g.size(); ++b)
      table[projection(a) * q + projection(b)] = projection(g(a, b));
  return {FiniteGroup(q, std::move(table)), std::move(projection)};
}

}  // namespace heapgr
