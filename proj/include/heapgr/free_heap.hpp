#pragma once

// The free heap on an alphabet X. Elements are odd-length words with no two
// equal adjacent letters; [u,v,w] is u ++ reverse(v) ++ w with adjacent equal
// pairs cancelled.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heapgr {

using Letter = std::uint32_t;

inline constexpr std::string_view kPointSymbol = "*";

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
 public:
  // Symbols must be distinct, nonempty, whitespace-free and not "*".
  static AlphabetPtr make(std::vector<std::string> symbols);

  // X ⊔ {*}: the letters of X keep their indices and * is appended last.
  static AlphabetPtr with_point(const AlphabetPtr& base);

  // Sorted distinct tokens of the given lines, "*" dropped.
  static AlphabetPtr infer(std::span<const std::string> lines);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter letter) const { return symbols_.at(letter); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<Letter> find(std::string_view symbol) const;
  // Throws InputError for a foreign symbol.
  Letter letter(std::string_view symbol) const;

  bool has_point() const noexcept { return base_ != nullptr; }
  // Only meaningful when has_point().
  Letter point() const noexcept { return static_cast<Letter>(symbols_.size() - 1); }
  const AlphabetPtr& base() const noexcept { return base_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ && a.has_point() == b.has_point();
  }

 private:
  Alphabet(std::vector<std::string> symbols, AlphabetPtr base)
      : symbols_(std::move(symbols)), base_(std::move(base)) {}

  std::vector<std::string> symbols_;
  AlphabetPtr base_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

class HeapWord {
 public:
  // `letters` must already be reduced and of odd length; throws InputError
  // otherwise. Use reduce() for raw sequences.
  HeapWord(AlphabetPtr alphabet, std::vector<Letter> letters);

  static HeapWord generator(AlphabetPtr alphabet, Letter letter);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  // Space-separated symbols.
  std::string str() const;

  friend bool operator==(const HeapWord& a, const HeapWord& b) {
    return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

  // Length first, then lexicographic by letter index.
  friend bool shortlex_less(const HeapWord& a, const HeapWord& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

 private:
  struct Trusted {};
  HeapWord(Trusted, AlphabetPtr alphabet, std::vector<Letter> letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {}

  friend HeapWord reduce(AlphabetPtr alphabet, std::span<const Letter> raw);
  friend HeapWord ternary(const HeapWord& u, const HeapWord& v, const HeapWord& w);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Cancels adjacent equal pairs in a single stack pass.
// Throws InputError for even length or letters outside the alphabet.
HeapWord reduce(AlphabetPtr alphabet, std::span<const Letter> raw);

// Whitespace-separated symbols of `alphabet`.
std::vector<Letter> parse_letters(const Alphabet& alphabet, std::string_view line);

// parse_letters followed by reduce.
HeapWord parse_word(AlphabetPtr alphabet, std::string_view line);

// reduce(u ++ reverse(v) ++ w). Throws InputError on alphabet mismatch.
HeapWord ternary(const HeapWord& u, const HeapWord& v, const HeapWord& w);

// A map of generators X -> Y.
class LetterMap {
 public:
  LetterMap(AlphabetPtr from, AlphabetPtr to, std::vector<Letter> image);

  const AlphabetPtr& from() const noexcept { return from_; }
  const AlphabetPtr& to() const noexcept { return to_; }
  Letter operator()(Letter x) const { return image_.at(x); }

 private:
  AlphabetPtr from_;
  AlphabetPtr to_;
  std::vector<Letter> image_;
};

// The free functor on morphisms: apply letterwise, then reduce.
HeapWord lift_map(const LetterMap& f, const HeapWord& w);

// Every reduced word of odd length <= max_length, shortlex order.
// Throws InputError if max_length is even.
std::vector<HeapWord> enumerate_reduced(const AlphabetPtr& alphabet,
                                        std::size_t max_length);

// m * (m-1)^(length-1) for odd length.
std::uint64_t reduced_word_count(std::size_t alphabet_size, std::size_t length);

}  // namespace heapgr
