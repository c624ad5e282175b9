#include "heapgr/universal.hpp"

#include <sstream>

#include "heapgr/errors.hpp"

namespace heapgr {
namespace {

std::string witness(std::initializer_list<Element> xs) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (Element x : xs) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << ')';
  return out.str();
}

void require_heap_hom(const FiniteMap& f, const FiniteHeap& src,
                      const FiniteHeap& dst, const char* what) {
  if (f.domain_size() != src.size() || f.codomain_size() != dst.size())
    throw InputError(std::string(what) + ": map sizes do not match");
  if (auto bad = heap_hom_violation(f, src, dst))
    throw DomainError(std::string(what) + ": not a heap homomorphism, fails at (a,b,c)=" +
                      witness({(*bad)[0], (*bad)[1], (*bad)[2]}));
}

void require_group_hom(const FiniteMap& f, const FiniteGroup& src,
                       const FiniteGroup& dst, const char* what) {
  if (f.domain_size() != src.size() || f.codomain_size() != dst.size())
    throw InputError(std::string(what) + ": map sizes do not match");
  if (auto bad = group_hom_violation(f, src, dst))
    throw DomainError(std::string(what) + ": not a group homomorphism, fails at (a,b)=" +
                      witness({(*bad)[0], (*bad)[1]}));
}

FiniteHeap checked_heap(FiniteHeap heap) {
  const auto report = verify_heap_axioms(heap);
  if (!report.passed())
    throw DomainError("not a heap: " + describe(report.violations.front()));
  return heap;
}

}  // namespace

// ---------------------------------------------------------------------------

UniversalGroup::UniversalGroup(FiniteHeap heap, Element basepoint) {
  heap = checked_heap(std::move(heap));
  FiniteGroup base = retract(heap, basepoint);
  state_ = std::make_shared<const State>(State{std::move(heap), basepoint, std::move(base)});
}

UgElement UniversalGroup::factor(Element a) const {
  if (a >= base().size()) throw InputError("factor: element out of range");
  return normalize({Syllable::base(a)});
}

UgElement UniversalGroup::iota(Element h) const {
  if (h >= heap().size()) throw InputError("iota: element out of range");
  // h read as an element of A = retract(H, e0), followed by t.
  return normalize({Syllable::base(h), Syllable::tau(1)});
}

void UniversalGroup::push(std::vector<Syllable>& stack, Syllable s) const {
  const FiniteGroup& a = base();
  if (s.kind == SyllableKind::base) {
    if (s.value < 0 || static_cast<std::size_t>(s.value) >= a.size())
      throw DomainError("syllable names an element outside the base group");
    if (static_cast<Element>(s.value) == a.identity()) return;
  } else if (s.value == 0) {
    return;
  }
  if (stack.empty() || stack.back().kind != s.kind) {
    stack.push_back(s);
    return;
  }
  Syllable& top = stack.back();
  if (s.kind == SyllableKind::base) {
    top.value = static_cast<std::int64_t>(
        a(static_cast<Element>(top.value), static_cast<Element>(s.value)));
    if (static_cast<Element>(top.value) == a.identity()) stack.pop_back();
  } else {
    top.value += s.value;
    if (top.value == 0) stack.pop_back();
  }
}

UgElement UniversalGroup::normalize(const std::vector<Syllable>& raw) const {
  std::vector<Syllable> stack;
  stack.reserve(raw.size());
  for (const Syllable& s : raw) push(stack, s);
  return {std::move(stack)};
}

bool UniversalGroup::is_normal_form(const UgElement& x) const {
  const auto& ss = x.syllables;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (ss[i].kind == SyllableKind::base) {
      if (ss[i].value < 0 || static_cast<std::size_t>(ss[i].value) >= base().size())
        return false;
      if (static_cast<Element>(ss[i].value) == base().identity()) return false;
    } else if (ss[i].value == 0) {
      return false;
    }
    if (i > 0 && ss[i - 1].kind == ss[i].kind) return false;
  }
  return true;
}

void UniversalGroup::validate(const UgElement& x) const {
  if (!is_normal_form(x))
    throw DomainError("element is not a normal form over this universal group: " +
                      format(x));
}

UgElement UniversalGroup::mul(const UgElement& x, const UgElement& y) const {
  validate(x);
  validate(y);
  std::vector<Syllable> stack = x.syllables;
  for (const Syllable& s : y.syllables) push(stack, s);
  return {std::move(stack)};
}

UgElement UniversalGroup::inv(const UgElement& x) const {
  validate(x);
  UgElement out;
  out.syllables.reserve(x.syllables.size());
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    if (it->kind == SyllableKind::base) {
      out.syllables.push_back(
          Syllable::base(base().inverse(static_cast<Element>(it->value))));
    } else {
      out.syllables.push_back(Syllable::tau(-it->value));
    }
  }
  return out;
}

std::string UniversalGroup::format(const UgElement& x) const {
  if (x.syllables.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < x.syllables.size(); ++i) {
    if (i) out << ' ';
    const Syllable& s = x.syllables[i];
    if (s.kind == SyllableKind::base) {
      out << 'a' << s.value;
    } else if (s.value == 1) {
      out << 't';
    } else {
      out << "t^" << s.value;
    }
  }
  return out.str();
}

UniversalGroup gr_object(const FiniteHeap& heap, Element basepoint) {
  return UniversalGroup(heap, basepoint);
}

UgElement iota(const UniversalGroup& u, Element h) { return u.iota(h); }

UgElement ug_mul(const UniversalGroup& u, const UgElement& x, const UgElement& y) {
  return u.mul(x, y);
}

UgElement ug_inv(const UniversalGroup& u, const UgElement& x) { return u.inv(x); }

// ---------------------------------------------------------------------------

UniversalHom::UniversalHom(const UniversalGroup& source, FiniteGroup target,
                           FiniteMap on_base, Element tau_image)
    : source_base_size_(source.base().size()),
      target_(std::move(target)),
      on_base_(std::move(on_base)),
      tau_image_(tau_image) {
  require_group_hom(on_base_, source.base(), target_, "universal hom");
  if (tau_image_ >= target_.size())
    throw InputError("universal hom: image of t outside the target group");
}

Element UniversalHom::operator()(const UgElement& x) const {
  Element result = target_.identity();
  for (const Syllable& s : x.syllables) {
    Element image;
    if (s.kind == SyllableKind::base) {
      if (s.value < 0 || static_cast<std::size_t>(s.value) >= source_base_size_)
        throw DomainError("universal hom: element from a different universal group");
      image = on_base_(static_cast<Element>(s.value));
    } else {
      image = target_.power(tau_image_, s.value);
    }
    result = target_(result, image);
  }
  return result;
}

GrMorphism::GrMorphism(const UniversalGroup& source, UniversalGroup target,
                       std::vector<UgElement> base_images, UgElement tau_image)
    : source_base_size_(source.base().size()),
      target_(std::move(target)),
      base_images_(std::move(base_images)),
      tau_image_(std::move(tau_image)) {
  if (base_images_.size() != source_base_size_)
    throw InputError("gr morphism: one image per base element required");
  for (const auto& x : base_images_) target_.validate(x);
  target_.validate(tau_image_);
  const FiniteGroup& a = source.base();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (base_images_[a(x, y)] != target_.mul(base_images_[x], base_images_[y]))
        throw DomainError("gr morphism: base images do not form a homomorphism, fails at " +
                          witness({x, y}));
}

UgElement GrMorphism::operator()(const UgElement& x) const {
  UgElement result = target_.identity();
  for (const Syllable& s : x.syllables) {
    if (s.kind == SyllableKind::base) {
      if (s.value < 0 || static_cast<std::size_t>(s.value) >= source_base_size_)
        throw DomainError("gr morphism: element from a different universal group");
      result = target_.mul(result, base_images_[static_cast<std::size_t>(s.value)]);
      continue;
    }
    // Square-and-multiply for t^n.
    UgElement power = s.value < 0 ? target_.inv(tau_image_) : tau_image_;
    std::uint64_t n = s.value < 0 ? -static_cast<std::uint64_t>(s.value)
                                  : static_cast<std::uint64_t>(s.value);
    UgElement acc = target_.identity();
    while (n) {
      if (n & 1u) acc = target_.mul(acc, power);
      n >>= 1;
      if (n) power = target_.mul(power, power);
    }
    result = target_.mul(result, acc);
  }
  return result;
}

UniversalHom universal_extension(const UniversalGroup& u, const FiniteMap& f,
                                 const FiniteGroup& target) {
  require_heap_hom(f, u.heap(), associated_heap(target), "universal extension");
  const Element anchor = f(u.basepoint());
  std::vector<Element> image(u.base().size());
  for (Element a = 0; a < image.size(); ++a)
    image[a] = target(f(a), target.inverse(anchor));
  return UniversalHom(u, target, FiniteMap(u.base().size(), target.size(), std::move(image)),
                      anchor);
}

GrMorphism gr_morphism(const UniversalGroup& source, const UniversalGroup& target,
                       const FiniteMap& f) {
  require_heap_hom(f, source.heap(), target.heap(), "gr morphism");
  const UgElement anchor = target.iota(f(source.basepoint()));
  const UgElement anchor_inv = target.inv(anchor);
  std::vector<UgElement> images;
  images.reserve(source.base().size());
  for (Element a = 0; a < source.base().size(); ++a)
    images.push_back(target.mul(target.iota(f(a)), anchor_inv));
  return GrMorphism(source, target, std::move(images), anchor);
}

FiniteMap adjunction_phi(const UniversalGroup& u, const UniversalHom& hom) {
  std::vector<Element> image(u.heap().size());
  for (Element h = 0; h < image.size(); ++h) image[h] = hom(u.iota(h));
  return FiniteMap(u.heap().size(), hom.target().size(), std::move(image));
}

std::vector<UniversalHom> enumerate_universal_homs(const UniversalGroup& u,
                                                   const FiniteGroup& target) {
  std::vector<UniversalHom> out;
  for (const FiniteMap& on_base : enumerate_group_homs(u.base(), target))
    for (Element t = 0; t < target.size(); ++t) out.emplace_back(u, target, on_base, t);
  return out;
}

UniversalHom compose(const UniversalHom& outer, const GrMorphism& inner,
                     const UniversalGroup& inner_source) {
  std::vector<Element> image;
  image.reserve(inner.base_images().size());
  for (const auto& x : inner.base_images()) image.push_back(outer(x));
  return UniversalHom(inner_source, outer.target(),
                      FiniteMap(inner_source.base().size(), outer.target().size(), std::move(image)),
                      outer(inner.tau_image()));
}

UniversalHom compose(const FiniteMap& g, const FiniteGroup& g_target,
                     const UniversalHom& inner, const UniversalGroup& source) {
  require_group_hom(g, inner.target(), g_target, "compose");
  return UniversalHom(source, g_target, heapgr::compose(g, inner.on_base()),
                      g(inner.tau_image()));
}

namespace {

UniversalHom coproduct_hom(const UniversalGroup& u, const FiniteHeap& target,
                           const FiniteMap& f, Element point) {
  require_heap_hom(f, u.heap(), target, "coproduct map");
  // H(retract(L, point)) is L itself, so f is a heap hom into it.
  return universal_extension(u, f, retract(checked_heap(target), point));
}

}  // namespace

CoproductMap::CoproductMap(const UniversalGroup& u, const FiniteHeap& target,
                           const FiniteMap& f, Element point)
    : hom_(coproduct_hom(u, target, f, point)) {}

CoproductMap coproduct_map(const UniversalGroup& u, const FiniteHeap& target,
                           const FiniteMap& f, Element point) {
  return CoproductMap(u, target, f, point);
}

// ---------------------------------------------------------------------------

bool reflects_iso(const FiniteMap& gmap, const FiniteGroup& src,
                  const FiniteGroup& dst) {
  require_group_hom(gmap, src, dst, "reflects_iso");
  return is_bijective(gmap);
}

SplitPairData::SplitPairData(FiniteGroup domain, FiniteGroup codomain, FiniteMap f,
                             FiniteMap g, FiniteHeap heap, FiniteMap h, FiniteMap t,
                             FiniteMap s)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      f_(std::move(f)),
      g_(std::move(g)),
      heap_(checked_heap(std::move(heap))),
      h_(std::move(h)),
      t_(std::move(t)),
      s_(std::move(s)) {
  require_group_hom(f_, domain_, codomain_, "split pair f");
  require_group_hom(g_, domain_, codomain_, "split pair g");
  const FiniteHeap hg = associated_heap(domain_);
  const FiniteHeap hg2 = associated_heap(codomain_);
  require_heap_hom(h_, hg2, heap_, "split pair h");
  require_heap_hom(t_, heap_, hg2, "split pair t");
  require_heap_hom(s_, hg2, hg, "split pair s");

  for (Element x = 0; x < domain_.size(); ++x)
    if (h_(f_(x)) != h_(g_(x)))
      throw DomainError("split pair: h∘f ≠ h∘g at x=" + std::to_string(x));
  for (Element y = 0; y < codomain_.size(); ++y)
    if (f_(s_(y)) != y)
      throw DomainError("split pair: f∘s ≠ id at y=" + std::to_string(y));
  for (Element z = 0; z < heap_.size(); ++z)
    if (h_(t_(z)) != z)
      throw DomainError("split pair: h∘t ≠ id at z=" + std::to_string(z));
  for (Element y = 0; y < codomain_.size(); ++y)
    if (g_(s_(y)) != t_(h_(y)))
      throw DomainError("split pair: g∘s ≠ t∘h at y=" + std::to_string(y));
}

Coequalizer coequalizer(const FiniteGroup& domain, const FiniteGroup& codomain,
                        const FiniteMap& f, const FiniteMap& g) {
  require_group_hom(f, domain, codomain, "coequalizer f");
  require_group_hom(g, domain, codomain, "coequalizer g");
  std::vector<Element> generators;
  for (Element x = 0; x < domain.size(); ++x)
    generators.push_back(codomain(f(x), codomain.inverse(g(x))));
  SubsetSpec kernel = normal_closure(codomain, generators);
  auto [quotient, projection] = quotient_group(codomain, kernel);
  return {std::move(quotient), std::move(projection), std::move(kernel)};
}

CoequalizerReport split_coequalizer(const SplitPairData& data) {
  Coequalizer coeq = coequalizer(data.domain(), data.codomain(), data.f(), data.g());
  FiniteHeap quotient_heap =
      quotient(associated_heap(data.codomain()), coeq.kernel, data.codomain().identity())
          .heap;

  CoequalizerReport report{std::move(coeq), std::move(quotient_heap)};
  const Coequalizer& c = report.coequalizer;
  report.coequalizes = compose(c.projection, data.f()) == compose(c.projection, data.g());
  report.heap_matches_quotient = associated_heap(c.quotient) == report.quotient_heap;

  // h is constant on cosets iff it factors through q.
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> comparison(c.quotient.size(), unset);
  bool factors = true;
  for (Element y = 0; y < data.codomain().size() && factors; ++y) {
    Element& slot = comparison[c.projection(y)];
    if (slot == unset) {
      slot = data.h()(y);
    } else {
      factors = slot == data.h()(y);
    }
  }
  if (factors && c.quotient.size() == data.heap().size()) {
    FiniteMap map(c.quotient.size(), data.heap().size(), std::move(comparison));
    report.comparison_is_iso =
        is_bijective(map) && check_heap_hom(map, associated_heap(c.quotient), data.heap());
  }
  return report;
}

}  // namespace heapgr
