#pragma once

// Exhaustive and randomized property suites over the built-in catalog. Each
// suite yields named checks; the CLI `verify` command and the acceptance
// runner are thin drivers over these.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heapgr/catalog.hpp"

namespace heapgr::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Checks = std::vector<Check>;

bool all_passed(const Checks& checks);

// Heaps of the catalog: associated heaps of the groups plus a relabelled copy
// of each so that index 0 is not always the identity.
std::vector<std::pair<std::string, FiniteHeap>> catalog_heaps(
    const std::vector<CatalogEntry>& groups);

// Heap axioms, para-associativity and Abelianness on associated heaps.
Checks axiom_checks(const std::vector<CatalogEntry>& groups);

// retract ∘ associated_heap ≅ id via x -> x e, and associated_heap ∘ retract = id.
Checks round_trip_checks(const std::vector<CatalogEntry>& groups);

// Normal sub-heaps, quotients and homomorphism bridges on the catalog.
Checks subheap_checks(const std::vector<CatalogEntry>& groups);

struct FreeHeapBounds {
  std::size_t random_words = 10000;
  std::size_t max_raw_length = 15;
  std::size_t max_alphabet = 3;
  std::size_t exhaustive_length = 5;  // all quintuples over |X| = 2
  std::size_t random_tuples = 10000;
  std::size_t random_length = 11;
  std::size_t enumeration_length = 9;
};

Checks free_heap_checks(const FreeHeapBounds& bounds, std::uint64_t seed);

struct FreeGroupBounds {
  std::size_t bijection_length = 7;
  std::size_t law_length = 5;
  std::size_t classical_length = 5;
  std::size_t random_pairs = 2000;
  std::size_t random_length = 15;
};

Checks free_group_checks(const FreeGroupBounds& bounds, std::uint64_t seed);

// Heaps and groups of order <= max_size from the catalog.
Checks universal_property_checks(std::size_t max_size, std::uint64_t seed);
Checks adjunction_checks(std::size_t max_size);
Checks monadicity_checks(const std::vector<CatalogEntry>& groups);
Checks functoriality_checks(std::size_t max_size, std::uint64_t seed);

struct SuiteOptions {
  std::optional<std::size_t> max_size;
  std::uint64_t seed = kDefaultSeed;
};

// axioms, round-trips, subheaps, free-heap, free-group, universal,
// adjunction, monadicity, functoriality, all
const std::vector<std::string>& suite_names();

// Throws InputError for an unknown suite name.
Checks run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace heapgr::verify
