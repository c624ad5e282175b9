#pragma once

// Small groups used as the built-in test catalog.

#include <string>
#include <vector>

#include "heapgr/finite.hpp"

namespace heapgr {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

// Z_n with addition mod n.
FiniteGroup cyclic_group(std::size_t n);

// Permutations of {0..k-1} in lexicographic order; index 0 is the identity.
FiniteGroup symmetric_group(std::size_t k);

// Even permutations of {0..k-1}, lexicographic order.
FiniteGroup alternating_group(std::size_t k);

// Symmetries of the n-gon, order 2n; element r^i s^j has index i + n*j.
FiniteGroup dihedral_group(std::size_t n);

// {1, -1, i, -i, j, -j, k, -k} as indices 0..7.
FiniteGroup quaternion_group();

// (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Z_1..Z_8, S3, D4, Q8.
std::vector<CatalogEntry> core_catalog();

// core_catalog plus further groups of order <= 12, filtered by max_order.
std::vector<CatalogEntry> extended_catalog(std::size_t max_order);

}  // namespace heapgr
