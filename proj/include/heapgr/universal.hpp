#pragma once

// The universal group of a finite heap H, modelled as the free product
// A ∗ <t> of A = retract(H, e0) with an infinite cyclic group, with the unit
// iota(h) = u_h t. Homomorphisms out of the model are determined by a
// homomorphism on A and the image of t, which makes hom-sets finite and
// enumerable for finite targets.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "heapgr/finite.hpp"

namespace heapgr {

enum class SyllableKind : std::uint8_t { base, tau };

// A factor of a free-product word: an element of A, or a power of t.
struct Syllable {
  SyllableKind kind;
  std::int64_t value;

  static Syllable base(Element a) { return {SyllableKind::base, static_cast<std::int64_t>(a)}; }
  static Syllable tau(std::int64_t power) { return {SyllableKind::tau, power}; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Normal form: kinds alternate, no base syllable is the identity of A, no
// t-power is zero. The empty sequence is the identity.
struct UgElement {
  std::vector<Syllable> syllables;

  friend bool operator==(const UgElement&, const UgElement&) = default;
};

class UniversalGroup {
 public:
  // Throws if the heap axioms fail or e0 is out of range.
  UniversalGroup(FiniteHeap heap, Element basepoint);

  const FiniteHeap& heap() const noexcept { return state_->heap; }
  const FiniteGroup& base() const noexcept { return state_->base; }
  Element basepoint() const noexcept { return state_->basepoint; }

  UgElement identity() const { return {}; }
  UgElement tau() const { return {{Syllable::tau(1)}}; }
  UgElement factor(Element a) const;
  UgElement iota(Element h) const;

  // Merges adjacent syllables of equal kind and drops trivial ones.
  UgElement normalize(const std::vector<Syllable>& raw) const;
  bool is_normal_form(const UgElement& x) const;
  // Throws DomainError if x is not a normal form over this group.
  void validate(const UgElement& x) const;

  UgElement mul(const UgElement& x, const UgElement& y) const;
  UgElement inv(const UgElement& x) const;

  // Base elements print as aN, powers of t as t or t^N, the identity as 1.
  std::string format(const UgElement& x) const;

  friend bool operator==(const UniversalGroup& a, const UniversalGroup& b) {
    return a.state_ == b.state_ ||
           (a.heap() == b.heap() && a.basepoint() == b.basepoint());
  }

 private:
  void push(std::vector<Syllable>& stack, Syllable s) const;

  struct State {
    FiniteHeap heap;
    Element basepoint;
    FiniteGroup base;
  };
  std::shared_ptr<const State> state_;
};

UniversalGroup gr_object(const FiniteHeap& heap, Element basepoint = 0);
UgElement iota(const UniversalGroup& u, Element h);
UgElement ug_mul(const UniversalGroup& u, const UgElement& x, const UgElement& y);
UgElement ug_inv(const UniversalGroup& u, const UgElement& x);

// A group homomorphism from the model into a finite group, given by a
// homomorphism on A and the image of t.
class UniversalHom {
 public:
  // Throws DomainError if on_base is not a group hom A -> target.
  UniversalHom(const UniversalGroup& source, FiniteGroup target,
               FiniteMap on_base, Element tau_image);

  const FiniteGroup& target() const noexcept { return target_; }
  const FiniteMap& on_base() const noexcept { return on_base_; }
  Element tau_image() const noexcept { return tau_image_; }

  Element operator()(const UgElement& x) const;

  friend bool operator==(const UniversalHom& a, const UniversalHom& b) {
    return a.on_base_ == b.on_base_ && a.tau_image_ == b.tau_image_ &&
           a.target_ == b.target_;
  }

 private:
  std::size_t source_base_size_;
  FiniteGroup target_;
  FiniteMap on_base_;
  Element tau_image_;
};

// A group homomorphism between two models, given by images of the A-elements
// and of t.
class GrMorphism {
 public:
  GrMorphism(const UniversalGroup& source, UniversalGroup target,
             std::vector<UgElement> base_images, UgElement tau_image);

  const UniversalGroup& target() const noexcept { return target_; }
  const std::vector<UgElement>& base_images() const noexcept { return base_images_; }
  const UgElement& tau_image() const noexcept { return tau_image_; }

  UgElement operator()(const UgElement& x) const;

 private:
  std::size_t source_base_size_;
  UniversalGroup target_;
  std::vector<UgElement> base_images_;
  UgElement tau_image_;
};

// The unique group hom extending a heap hom f: H -> H(S) along iota:
// a -> f(a) f(e0)^-1 and t -> f(e0). Throws DomainError if f is not a
// heap hom into the associated heap of S.
UniversalHom universal_extension(const UniversalGroup& u, const FiniteMap& f,
                                 const FiniteGroup& target);

// Gr(f) for a heap hom f: H -> H', the universal extension of iota' ∘ f.
GrMorphism gr_morphism(const UniversalGroup& source, const UniversalGroup& target,
                       const FiniteMap& f);

// h -> F(iota(h)), a heap hom H -> H(G).
FiniteMap adjunction_phi(const UniversalGroup& u, const UniversalHom& hom);

// Every group hom from the model into `target`: (hom on A, image of t).
std::vector<UniversalHom> enumerate_universal_homs(const UniversalGroup& u,
                                                   const FiniteGroup& target);

// outer ∘ inner
UniversalHom compose(const UniversalHom& outer, const GrMorphism& inner,
                     const UniversalGroup& inner_source);
// g ∘ F for a group hom g: F.target() -> g_target.
UniversalHom compose(const FiniteMap& g, const FiniteGroup& g_target,
                     const UniversalHom& inner, const UniversalGroup& source);

// The coproduct map f ⊞ g: H(model) -> L determined by a heap hom f: H -> L
// on iota-images and by sending the identity to `point`.
class CoproductMap {
 public:
  CoproductMap(const UniversalGroup& u, const FiniteHeap& target,
               const FiniteMap& f, Element point);

  Element operator()(const UgElement& x) const { return hom_(x); }
  const UniversalHom& as_group_hom() const noexcept { return hom_; }

 private:
  UniversalHom hom_;
};

CoproductMap coproduct_map(const UniversalGroup& u, const FiniteHeap& target,
                           const FiniteMap& f, Element point);

// ---------------------------------------------------------------------------
// Monadicity checks

// True iff the group hom is bijective, which is when its associated heap map
// is a heap isomorphism. Throws DomainError if gmap is not a group hom.
bool reflects_iso(const FiniteMap& gmap, const FiniteGroup& src,
                  const FiniteGroup& dst);

// Parallel group homs f, g: G -> G' with heap-level maps h: H(G') -> H,
// t: H -> H(G'), s: H(G') -> H(G) such that h∘f = h∘g, f∘s = id, h∘t = id and
// g∘s = t∘h.
class SplitPairData {
 public:
  // Throws DomainError naming the first identity that fails.
  SplitPairData(FiniteGroup domain, FiniteGroup codomain, FiniteMap f, FiniteMap g,
                FiniteHeap heap, FiniteMap h, FiniteMap t, FiniteMap s);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  const FiniteMap& f() const noexcept { return f_; }
  const FiniteMap& g() const noexcept { return g_; }
  const FiniteHeap& heap() const noexcept { return heap_; }
  const FiniteMap& h() const noexcept { return h_; }
  const FiniteMap& t() const noexcept { return t_; }
  const FiniteMap& s() const noexcept { return s_; }

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  FiniteMap f_, g_;
  FiniteHeap heap_;
  FiniteMap h_, t_, s_;
};

struct Coequalizer {
  FiniteGroup quotient;
  FiniteMap projection;
  SubsetSpec kernel;
};

// G' modulo the normal closure of { f(x) g(x)^-1 }.
Coequalizer coequalizer(const FiniteGroup& domain, const FiniteGroup& codomain,
                        const FiniteMap& f, const FiniteMap& g);

struct CoequalizerReport {
  Coequalizer coequalizer;
  FiniteHeap quotient_heap;           // quotient(H(G'), kernel, identity)
  bool coequalizes = false;           // q∘f = q∘g
  bool heap_matches_quotient = false; // H(Q) equals quotient_heap as a table
  bool comparison_is_iso = false;     // h factors through q as a heap iso H(Q) -> H
};

CoequalizerReport split_coequalizer(const SplitPairData& data);

}  // namespace heapgr
