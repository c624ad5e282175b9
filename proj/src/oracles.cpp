#include "heapgr/oracles.hpp"

#include <map>

namespace heapgr::oracle {

std::vector<Letter> naive_reduce(std::vector<Letter> raw, Strategy strategy, Rng* rng) {
  while (true) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
      if (raw[i] == raw[i + 1]) sites.push_back(i);
    if (sites.empty()) return raw;
    std::size_t at = 0;
    switch (strategy) {
      case Strategy::leftmost: at = sites.front(); break;
      case Strategy::rightmost: at = sites.back(); break;
      case Strategy::random: at = sites[draw(*rng, sites.size())]; break;
    }
    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(at),
              raw.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

namespace {

void explore(const std::vector<Letter>& word,
             std::map<std::vector<Letter>, bool>& seen,
             std::set<std::vector<Letter>>& terminal) {
  if (!seen.emplace(word, true).second) return;
  bool any = false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] != word[i + 1]) continue;
    any = true;
    std::vector<Letter> next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
    explore(next, seen, terminal);
  }
  if (!any) terminal.insert(word);
}

}  // namespace

std::set<std::vector<Letter>> all_reductions(const std::vector<Letter>& raw) {
  std::map<std::vector<Letter>, bool> seen;
  std::set<std::vector<Letter>> terminal;
  explore(raw, seen, terminal);
  return terminal;
}

std::vector<FiniteMap> brute_force_group_homs(const FiniteGroup& src, const FiniteGroup& dst) {
  std::vector<FiniteMap> out;
  std::vector<Element> image(src.size(), 0);
  while (true) {
    FiniteMap f(src.size(), dst.size(), image);
    if (check_group_hom(f, src, dst)) out.push_back(std::move(f));
    std::size_t i = src.size();
    while (i > 0) {
      --i;
      if (++image[i] < dst.size()) break;
      image[i] = 0;
      if (i == 0) return out;
    }
  }
}

UgElement random_order_normalize(const UniversalGroup& u, std::vector<Syllable> raw, Rng& rng) {
  const FiniteGroup& a = u.base();
  auto trivial = [&](const Syllable& s) {
    return s.kind == SyllableKind::base ? static_cast<Element>(s.value) == a.identity()
                                        : s.value == 0;
  };
  while (true) {
    std::vector<std::size_t> drops, merges;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (trivial(raw[i])) drops.push_back(i);
      if (i + 1 < raw.size() && raw[i].kind == raw[i + 1].kind) merges.push_back(i);
    }
    if (drops.empty() && merges.empty()) return {std::move(raw)};
    const std::size_t pick = draw(rng, drops.size() + merges.size());
    if (pick < drops.size()) {
      raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(drops[pick]));
      continue;
    }
    const std::size_t i = merges[pick - drops.size()];
    Syllable merged = raw[i];
    if (merged.kind == SyllableKind::base) {
      merged.value = static_cast<std::int64_t>(
          a(static_cast<Element>(raw[i].value), static_cast<Element>(raw[i + 1].value)));
    } else {
      merged.value = raw[i].value + raw[i + 1].value;
    }
    raw[i] = merged;
    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
}

Element coproduct_componentwise(const UniversalGroup& u, const FiniteHeap& target,
                                const FiniteMap& f, Element point, const UgElement& x) {
  const Element anchor = f(u.basepoint());
  auto mul = [&](Element p, Element q) { return target(p, point, q); };
  auto inv = [&](Element p) { return target(point, p, point); };
  Element result = point;
  for (const Syllable& s : x.syllables) {
    if (s.kind == SyllableKind::base) {
      result = mul(result, target(f(static_cast<Element>(s.value)), anchor, point));
      continue;
    }
    const Element step = s.value < 0 ? inv(anchor) : anchor;
    const std::int64_t count = s.value < 0 ? -s.value : s.value;
    for (std::int64_t k = 0; k < count; ++k) result = mul(result, step);
  }
  return result;
}

std::vector<Syllable> random_syllables(const UniversalGroup& u, std::size_t max_syllables,
                                       Rng& rng) {
  const std::size_t length = draw(rng, max_syllables + 1);
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < length; ++i) {
    if (draw(rng, 2)) {
      raw.push_back(Syllable::base(draw(rng, u.base().size())));
    } else {
      raw.push_back(Syllable::tau(static_cast<std::int64_t>(draw(rng, 7)) - 3));
    }
  }
  return raw;
}

UgElement random_element(const UniversalGroup& u, std::size_t max_syllables, Rng& rng) {
  return u.normalize(random_syllables(u, max_syllables, rng));
}

FiniteHeap relabel(const FiniteHeap& heap, const std::vector<Element>& perm) {
  const std::size_t n = heap.size();
  std::vector<Element> back(n);
  for (Element x = 0; x < n; ++x) back[perm[x]] = x;
  std::vector<Element> table(n * n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        table[(a * n + b) * n + c] = perm[heap(back[a], back[b], back[c])];
  return FiniteHeap(n, std::move(table));
}

}  // namespace heapgr::oracle
