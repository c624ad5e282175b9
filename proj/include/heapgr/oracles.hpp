#pragma once

// Reference implementations that share no code path with the library
// operations they are used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "heapgr/finite.hpp"
#include "heapgr/free_heap.hpp"
#include "heapgr/universal.hpp"

namespace heapgr::oracle {

using Rng = std::mt19937_64;

// Uniform draw in [0, bound).
inline std::uint64_t draw(Rng& rng, std::uint64_t bound) { return rng() % bound; }

enum class Strategy { leftmost, rightmost, random };

// Deletes one adjacent equal pair at a time until none remains.
std::vector<Letter> naive_reduce(std::vector<Letter> raw, Strategy strategy, Rng* rng = nullptr);

// Every terminal word reachable by some deletion order.
std::set<std::vector<Letter>> all_reductions(const std::vector<Letter>& raw);

// Brute force over all |dst|^|src| maps.
std::vector<FiniteMap> brute_force_group_homs(const FiniteGroup& src, const FiniteGroup& dst);

// Merges a randomly chosen adjacent mergeable pair, or drops a randomly chosen
// trivial syllable, until nothing applies.
UgElement random_order_normalize(const UniversalGroup& u, std::vector<Syllable> raw, Rng& rng);

// Evaluates the coproduct map f ⊞ point on x using only the ternary operation
// of L: a -> [f(a), f(e0), point], t -> f(e0), x y -> [x, point, y],
// x^-1 -> [point, x, point].
Element coproduct_componentwise(const UniversalGroup& u, const FiniteHeap& target,
                                const FiniteMap& f, Element point, const UgElement& x);

// Random raw syllable sequence of at most max_syllables entries.
std::vector<Syllable> random_syllables(const UniversalGroup& u, std::size_t max_syllables,
                                       Rng& rng);

// Normal form of a random raw sequence.
UgElement random_element(const UniversalGroup& u, std::size_t max_syllables, Rng& rng);

// Heap isomorphic to `heap` with element x renamed perm[x].
FiniteHeap relabel(const FiniteHeap& heap, const std::vector<Element>& perm);

}  // namespace heapgr::oracle
