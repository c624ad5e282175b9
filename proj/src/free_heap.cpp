#include "heapgr/free_heap.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "heapgr/errors.hpp"

namespace heapgr {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Pushes `letter` onto a reduced stack, cancelling against the top.
inline void push_cancel(std::vector<Letter>& stack, Letter letter) {
  if (!stack.empty() && stack.back() == letter) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

}  // namespace

AlphabetPtr Alphabet::make(std::vector<std::string> symbols) {
  if (symbols.empty()) throw InputError("alphabet must not be empty");
  std::set<std::string_view> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw InputError("alphabet symbols must be nonempty");
    if (s == kPointSymbol)
      throw InputError("'*' is reserved for the adjoined point");
    if (std::any_of(s.begin(), s.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      throw InputError("alphabet symbol '" + s + "' contains whitespace");
    if (!seen.insert(s).second)
      throw InputError("alphabet symbol '" + s + "' listed twice");
  }
  return AlphabetPtr(new Alphabet(std::move(symbols), nullptr));
}

AlphabetPtr Alphabet::with_point(const AlphabetPtr& base) {
  if (!base) throw InputError("with_point: null alphabet");
  if (base->has_point()) return base;
  auto symbols = base->symbols_;
  symbols.emplace_back(kPointSymbol);
  return AlphabetPtr(new Alphabet(std::move(symbols), base));
}

AlphabetPtr Alphabet::infer(std::span<const std::string> lines) {
  std::set<std::string> found;
  for (const auto& line : lines)
    for (auto token : tokens(line))
      if (token != kPointSymbol) found.emplace(token);
  return make(std::vector<std::string>(found.begin(), found.end()));
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view symbol) const {
  if (auto found = find(symbol)) return *found;
  throw InputError("letter '" + std::string(symbol) + "' is not in the alphabet");
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

HeapWord::HeapWord(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw InputError("heap word without alphabet");
  if (letters_.size() % 2 == 0)
    throw InputError("heap word must have odd length, got " +
                     std::to_string(letters_.size()));
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= alphabet_->size())
      throw InputError("heap word letter index outside the alphabet");
    if (i + 1 < letters_.size() && letters_[i] == letters_[i + 1])
      throw InputError("heap word is not reduced at position " + std::to_string(i + 1));
  }
}

HeapWord HeapWord::generator(AlphabetPtr alphabet, Letter letter) {
  return HeapWord(std::move(alphabet), std::vector<Letter>{letter});
}

std::string HeapWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_->symbol(letters_[i]);
  }
  return out;
}

HeapWord reduce(AlphabetPtr alphabet, std::span<const Letter> raw) {
  if (!alphabet) throw InputError("reduce: null alphabet");
  if (raw.size() % 2 == 0)
    throw InputError("heap word must have odd length, got " + std::to_string(raw.size()));
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter letter : raw) {
    if (letter >= alphabet->size())
      throw InputError("letter index " + std::to_string(letter) + " is not in the alphabet");
    push_cancel(stack, letter);
  }
  return HeapWord(HeapWord::Trusted{}, std::move(alphabet), std::move(stack));
}

std::vector<Letter> parse_letters(const Alphabet& alphabet, std::string_view line) {
  std::vector<Letter> out;
  for (auto token : tokens(line)) out.push_back(alphabet.letter(token));
  return out;
}

HeapWord parse_word(AlphabetPtr alphabet, std::string_view line) {
  const auto raw = parse_letters(*alphabet, line);
  return reduce(std::move(alphabet), raw);
}

HeapWord ternary(const HeapWord& u, const HeapWord& v, const HeapWord& w) {
  if (!same_alphabet(u.alphabet(), v.alphabet()) ||
      !same_alphabet(u.alphabet(), w.alphabet()))
    throw InputError("ternary: words over different alphabets");
  std::vector<Letter> stack;
  stack.reserve(u.length() + v.length() + w.length());
  stack = u.letters();
  for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it)
    push_cancel(stack, *it);
  for (Letter letter : w.letters()) push_cancel(stack, letter);
  return HeapWord(HeapWord::Trusted{}, u.alphabet(), std::move(stack));
}

// ---------------------------------------------------------------------------

LetterMap::LetterMap(AlphabetPtr from, AlphabetPtr to, std::vector<Letter> image)
    : from_(std::move(from)), to_(std::move(to)), image_(std::move(image)) {
  if (!from_ || !to_) throw InputError("letter map: null alphabet");
  if (image_.size() != from_->size())
    throw InputError("letter map must be total on its domain alphabet");
  for (Letter y : image_)
    if (y >= to_->size()) throw InputError("letter map image outside the target alphabet");
}

HeapWord lift_map(const LetterMap& f, const HeapWord& w) {
  if (!same_alphabet(f.from(), w.alphabet()))
    throw InputError("lift_map: word letters outside the map's domain");
  std::vector<Letter> image;
  image.reserve(w.length());
  for (Letter x : w.letters()) image.push_back(f(x));
  return reduce(f.to(), image);
}

std::vector<HeapWord> enumerate_reduced(const AlphabetPtr& alphabet,
                                        std::size_t max_length) {
  if (max_length % 2 == 0)
    throw InputError("enumerate_reduced: max_length must be odd");
  const Letter m = static_cast<Letter>(alphabet->size());
  std::vector<HeapWord> out;
  std::vector<Letter> current;
  for (std::size_t length = 1; length <= max_length; length += 2) {
    current.assign(length, 0);
    // Odometer over adjacent-distinct words, least significant letter last.
    auto fix_from = [&](std::size_t i) {
      for (; i < length; ++i) current[i] = (i > 0 && current[i - 1] == 0) ? 1 : 0;
    };
    if (m == 1 && length > 1) break;
    fix_from(1);
    while (true) {
      out.push_back(HeapWord(alphabet, current));
      std::size_t i = length;
      bool advanced = false;
      while (i > 0) {
        --i;
        Letter next = current[i] + 1;
        if (i > 0 && next == current[i - 1]) ++next;
        if (next < m) {
          current[i] = next;
          fix_from(i + 1);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return out;
}

std::uint64_t reduced_word_count(std::size_t alphabet_size, std::size_t length) {
  if (length % 2 == 0) return 0;
  std::uint64_t count = alphabet_size;
  for (std::size_t i = 1; i < length; ++i) count *= alphabet_size - 1;
  return count;
}

}  // namespace heapgr
