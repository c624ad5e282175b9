#include "heapgr/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "heapgr/errors.hpp"

namespace heapgr {
namespace {

using Perm = std::vector<std::size_t>;

std::vector<Perm> permutations(std::size_t k, bool even_only) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (p * q)(x) = p(q(x))
FiniteGroup permutation_group(const std::vector<Perm>& elems) {
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Perm c(elems[a].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = elems[a][elems[b][x]];
      table[a * n + b] = static_cast<Element>(
          std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  return FiniteGroup(n, std::move(table));
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(table));
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 5) throw InputError("symmetric group degree must be 1..5");
  return permutation_group(permutations(k, false));
}

FiniteGroup alternating_group(std::size_t k) {
  if (k == 0 || k > 5) throw InputError("alternating group degree must be 1..5");
  return permutation_group(permutations(k, true));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InputError("dihedral group parameter must be positive");
  const std::size_t order = 2 * n;
  // r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j + l)
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
      const std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
      table[a * order + b] = rot + n * ((j + l) % 2);
    }
  return FiniteGroup(order, std::move(table));
}

FiniteGroup quaternion_group() {
  // Index 2u + s encodes sign s in {+,-} on unit u in {1, i, j, k}.
  // Unit products u*v = sign * unit.
  static constexpr int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int u = a / 2, v = b / 2;
      const int s = (a % 2 + b % 2 + sign[u][v]) % 2;
      table[a * 8 + b] = static_cast<Element>(2 * unit[u][v] + s);
    }
  return FiniteGroup(8, std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.size() * h.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      table[x * n + y] = g(x / h.size(), y / h.size()) * h.size() +
                         h(x % h.size(), y % h.size());
  return FiniteGroup(n, std::move(table));
}

std::vector<CatalogEntry> core_catalog() {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= 8; ++n)
    out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  out.push_back({"S3", symmetric_group(3)});
  out.push_back({"D4", dihedral_group(4)});
  out.push_back({"Q8", quaternion_group()});
  return out;
}

std::vector<CatalogEntry> extended_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> all = core_catalog();
  const auto z2 = cyclic_group(2);
  all.push_back({"Z2xZ2", direct_product(z2, z2)});
  all.push_back({"Z2xZ4", direct_product(z2, cyclic_group(4))});
  all.push_back({"Z2xZ2xZ2", direct_product(z2, direct_product(z2, z2))});
  for (std::size_t n = 9; n <= 12; ++n)
    all.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  all.push_back({"Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3))});
  all.push_back({"D5", dihedral_group(5)});
  all.push_back({"D6", dihedral_group(6)});
  all.push_back({"A4", alternating_group(4)});
  all.push_back({"Z2xZ6", direct_product(z2, cyclic_group(6))});
  std::erase_if(all, [&](const CatalogEntry& e) { return e.group.size() > max_order; });
  return all;
}

}  // namespace heapgr
