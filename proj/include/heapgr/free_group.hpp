#pragma once

// The free group on X realised as the retract at * of the free heap on
// X ⊔ {*}, alongside a classical reduced-word model used as an oracle and
// interchange format.

#include <string>
#include <string_view>
#include <vector>

#include "heapgr/free_heap.hpp"

namespace heapgr {

// A free-heap word over X ⊔ {*}.
class PointedWord {
 public:
  // Throws InputError unless the word's alphabet carries the point.
  explicit PointedWord(HeapWord word);

  const HeapWord& word() const noexcept { return word_; }
  const AlphabetPtr& alphabet() const noexcept { return word_.alphabet(); }
  // X, without the point.
  const AlphabetPtr& base() const noexcept { return word_.alphabet()->base(); }
  std::string str() const { return word_.str(); }

  friend bool operator==(const PointedWord&, const PointedWord&) = default;

 private:
  HeapWord word_;
};

// Tokens over X plus "*", reduced. `base` is X.
PointedWord parse_pointed(const AlphabetPtr& base, std::string_view line);

PointedWord fg_identity(const AlphabetPtr& base);
// [u, *, v]
PointedWord fg_mul(const PointedWord& u, const PointedWord& v);
// [*, w, *]
PointedWord fg_inv(const PointedWord& w);

struct SignedLetter {
  Letter letter;
  int exponent;  // +1 or -1

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

// Freely reduced word in letters of X with exponents ±1.
class ClassicalWord {
 public:
  // Throws InputError if not freely reduced or an exponent is not ±1.
  ClassicalWord(AlphabetPtr base, std::vector<SignedLetter> letters);

  static ClassicalWord identity(AlphabetPtr base) { return {std::move(base), {}}; }

  const AlphabetPtr& base() const noexcept { return base_; }
  const std::vector<SignedLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  // Tokens `x` and `x^-1`; the empty word prints as an empty string.
  std::string str() const;

  friend bool operator==(const ClassicalWord& a, const ClassicalWord& b) {
    return a.letters_ == b.letters_ && same_alphabet(a.base_, b.base_);
  }

 private:
  AlphabetPtr base_;
  std::vector<SignedLetter> letters_;
};

// Free reduction of an arbitrary signed sequence.
ClassicalWord free_reduce(AlphabetPtr base, std::span<const SignedLetter> raw);

// Tokens `x`, `x^1`, `x^-1`. Rejects sequences that are not freely reduced.
ClassicalWord parse_classical(const AlphabetPtr& base, std::string_view line);

ClassicalWord classical_mul(const ClassicalWord& a, const ClassicalWord& b);
ClassicalWord classical_inv(const ClassicalWord& a);

// Odd positions (1-based) get +1, even positions -1, * is deleted, then the
// result is freely reduced.
ClassicalWord to_classical(const PointedWord& w);

// Inverse of to_classical: * is inserted wherever the sign pattern would
// otherwise break alternation, and appended if needed for odd length.
PointedWord from_classical(const ClassicalWord& c);

// All freely reduced words of length <= max_length, shortlex by
// (letter, exponent) with +1 before -1.
std::vector<ClassicalWord> enumerate_classical(const AlphabetPtr& base,
                                               std::size_t max_length);

}  // namespace heapgr
