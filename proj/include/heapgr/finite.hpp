#pragma once

// Finite heaps and groups given by operation tables, and the constructions
// relating them: retracts, associated heaps, sub-heaps, quotients and
// homomorphism checks.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace heapgr {

// Elements of a finite carrier are dense indices 0..n-1.
using Element = std::size_t;

class FiniteHeap {
 public:
  // `table` is row-major over (a, b, c); only the index range is checked here,
  // the axioms are checked by verify_heap_axioms.
  FiniteHeap(std::size_t size, std::vector<Element> table);

  static FiniteHeap singleton();

  std::size_t size() const noexcept { return size_; }
  const std::vector<Element>& table() const noexcept { return table_; }

  Element operator()(Element a, Element b, Element c) const noexcept {
    return table_[(a * size_ + b) * size_ + c];
  }

  friend bool operator==(const FiniteHeap&, const FiniteHeap&) = default;

 private:
  std::size_t size_;
  std::vector<Element> table_;
};

enum class GroupLaw { closure, associativity, identity, inverse };

struct GroupViolation {
  GroupLaw law;
  std::vector<Element> witness;
};

// First violated group law, or nothing if the binary table is a group.
std::optional<GroupViolation> verify_group_laws(std::size_t size,
                                                const std::vector<Element>& table);

std::string describe(const GroupViolation& violation);

class FiniteGroup {
 public:
  // Infers the identity and inverses. Throws InputError for out-of-range
  // entries and DomainError if any group law fails.
  FiniteGroup(std::size_t size, std::vector<Element> table);

  static FiniteGroup trivial();

  std::size_t size() const noexcept { return size_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }

  Element operator()(Element a, Element b) const noexcept {
    return table_[a * size_ + b];
  }

  // a^n for any integer n.
  Element power(Element a, long long n) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::size_t size_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

// A subset of a carrier of size `parent_size`; members are kept sorted.
class SubsetSpec {
 public:
  SubsetSpec(std::size_t parent_size, std::vector<Element> members);

  std::size_t parent_size() const noexcept { return parent_size_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element e) const noexcept {
    return e < parent_size_ && mask_[e];
  }

  friend bool operator==(const SubsetSpec& a, const SubsetSpec& b) {
    return a.parent_size_ == b.parent_size_ && a.members_ == b.members_;
  }

 private:
  std::size_t parent_size_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

class FiniteMap {
 public:
  FiniteMap(std::size_t domain_size, std::size_t codomain_size,
            std::vector<Element> image);

  static FiniteMap identity(std::size_t size);
  static FiniteMap constant(std::size_t domain_size, std::size_t codomain_size,
                            Element value);

  std::size_t domain_size() const noexcept { return image_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_size_; }
  const std::vector<Element>& image() const noexcept { return image_; }

  Element operator()(Element x) const noexcept { return image_[x]; }

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  std::size_t codomain_size_;
  std::vector<Element> image_;
};

// outer ∘ inner
FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner);
bool is_bijective(const FiniteMap& f);
std::optional<FiniteMap> inverse_map(const FiniteMap& f);

// ---------------------------------------------------------------------------
// Heap axioms

enum class HeapLaw { associativity, malcev, para_associativity, abelian };

struct LawViolation {
  HeapLaw law;
  std::vector<Element> witness;
};

struct AxiomReport {
  std::vector<LawViolation> violations;  // at most one per law, lexicographically first

  bool passed() const noexcept { return violations.empty(); }
};

std::string describe(const LawViolation& violation);

// [[a,b,c],d,e] = [a,b,[c,d,e]] over all quintuples and
// [a,b,b] = a = [b,b,a] over all pairs.
AxiomReport verify_heap_axioms(const FiniteHeap& heap);

// [[a,b,c],d,e] = [a,[d,c,b],e] over all quintuples.
AxiomReport verify_para_associativity(const FiniteHeap& heap);

std::optional<std::array<Element, 3>> abelian_violation(const FiniteHeap& heap);
bool is_abelian(const FiniteHeap& heap);

// ---------------------------------------------------------------------------
// Heaps from groups and groups from heaps

// [a,b,c] = a b^-1 c
FiniteHeap associated_heap(const FiniteGroup& group);

// a +_e b = [a,e,b], identity e, inverse [e,a,e].
FiniteGroup retract(const FiniteHeap& heap, Element e);

// ---------------------------------------------------------------------------
// Homomorphisms

std::optional<std::array<Element, 3>> heap_hom_violation(
    const FiniteMap& f, const FiniteHeap& src, const FiniteHeap& dst);
bool check_heap_hom(const FiniteMap& f, const FiniteHeap& src,
                    const FiniteHeap& dst);

std::optional<std::array<Element, 2>> group_hom_violation(
    const FiniteMap& f, const FiniteGroup& src, const FiniteGroup& dst);
bool check_group_hom(const FiniteMap& f, const FiniteGroup& src,
                     const FiniteGroup& dst);

bool is_isomorphism(const FiniteMap& f, const FiniteGroup& src,
                    const FiniteGroup& dst);

// Brute-force search over images of a generating set.
std::optional<FiniteMap> find_isomorphism(const FiniteGroup& src,
                                          const FiniteGroup& dst);

// A generating set chosen greedily in index order.
std::vector<Element> generating_set(const FiniteGroup& group);

// All group homomorphisms, enumerated through images of a generating set.
std::vector<FiniteMap> enumerate_group_homs(const FiniteGroup& src,
                                            const FiniteGroup& dst);

// All heap homomorphisms, by filtering the |dst|^|src| maps.
std::vector<FiniteMap> enumerate_heap_homs(const FiniteHeap& src,
                                           const FiniteHeap& dst);

// ---------------------------------------------------------------------------
// Sub-heaps, normality and quotients

bool is_subheap(const FiniteHeap& heap, const SubsetSpec& subset);

// For all x in H and s in S there is s' in S with [x,e,s] = [s',e,x].
// Throws DomainError if e is not in S or S is not closed.
bool is_normal_subheap(const FiniteHeap& heap, const SubsetSpec& subset,
                       Element e);

bool is_normal_subgroup(const FiniteGroup& group, const SubsetSpec& subset);

// Smallest normal subgroup containing `generators`.
SubsetSpec normal_closure(const FiniteGroup& group,
                          const std::vector<Element>& generators);

// Labels each element by its coset of S in retract(heap, e); labels are
// assigned in order of the smallest member of each coset.
FiniteMap coset_labels(const FiniteHeap& heap, const SubsetSpec& subset,
                       Element e);

struct HeapQuotient {
  FiniteHeap heap;
  FiniteMap projection;
};

// Throws DomainError unless S is a normal sub-heap at e.
HeapQuotient quotient(const FiniteHeap& heap, const SubsetSpec& subset,
                      Element e);

struct GroupQuotient {
  FiniteGroup group;
  FiniteMap projection;
};

// Cosets labelled as in coset_labels. Throws DomainError unless N is normal.
GroupQuotient quotient_group(const FiniteGroup& group, const SubsetSpec& normal);

}  // namespace heapgr
