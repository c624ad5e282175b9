#include "heapgr/free_group.hpp"

#include <cctype>
#include <charconv>

#include "heapgr/errors.hpp"

namespace heapgr {
namespace {

bool cancels(const SignedLetter& a, const SignedLetter& b) {
  return a.letter == b.letter && a.exponent == -b.exponent;
}

void push_cancel(std::vector<SignedLetter>& stack, SignedLetter letter) {
  if (!stack.empty() && cancels(stack.back(), letter)) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

const AlphabetPtr& require_pointed(const HeapWord& w) {
  if (!w.alphabet()->has_point())
    throw InputError("pointed word must be over an alphabet with '*' adjoined");
  return w.alphabet();
}

}  // namespace

PointedWord::PointedWord(HeapWord word) : word_(std::move(word)) {
  require_pointed(word_);
}

PointedWord parse_pointed(const AlphabetPtr& base, std::string_view line) {
  return PointedWord(parse_word(Alphabet::with_point(base), line));
}

PointedWord fg_identity(const AlphabetPtr& base) {
  const auto pointed = Alphabet::with_point(base);
  return PointedWord(HeapWord::generator(pointed, pointed->point()));
}

PointedWord fg_mul(const PointedWord& u, const PointedWord& v) {
  const auto& alphabet = u.alphabet();
  return PointedWord(
      ternary(u.word(), HeapWord::generator(alphabet, alphabet->point()), v.word()));
}

PointedWord fg_inv(const PointedWord& w) {
  const auto& alphabet = w.alphabet();
  const auto star = HeapWord::generator(alphabet, alphabet->point());
  return PointedWord(ternary(star, w.word(), star));
}

// ---------------------------------------------------------------------------

ClassicalWord::ClassicalWord(AlphabetPtr base, std::vector<SignedLetter> letters)
    : base_(std::move(base)), letters_(std::move(letters)) {
  if (!base_) throw InputError("classical word without alphabet");
  if (base_->has_point())
    throw InputError("classical words are over X, without the point");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].letter >= base_->size())
      throw InputError("classical word letter outside the alphabet");
    if (letters_[i].exponent != 1 && letters_[i].exponent != -1)
      throw InputError("classical word exponents must be +1 or -1");
    if (i > 0 && cancels(letters_[i - 1], letters_[i]))
      throw InputError("classical word is not freely reduced at position " +
                       std::to_string(i));
  }
}

std::string ClassicalWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += base_->symbol(letters_[i].letter);
    if (letters_[i].exponent < 0) out += "^-1";
  }
  return out;
}

ClassicalWord free_reduce(AlphabetPtr base, std::span<const SignedLetter> raw) {
  std::vector<SignedLetter> stack;
  for (const auto& letter : raw) push_cancel(stack, letter);
  return ClassicalWord(std::move(base), std::move(stack));
}

ClassicalWord parse_classical(const AlphabetPtr& base, std::string_view line) {
  std::vector<SignedLetter> letters;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start) break;
    std::string_view token = line.substr(start, i - start);
    int exponent = 1;
    if (const auto caret = token.rfind('^'); caret != std::string_view::npos) {
      const auto power = token.substr(caret + 1);
      if (power == "-1") {
        exponent = -1;
      } else if (power != "1") {
        throw InputError("exponent in '" + std::string(token) + "' must be 1 or -1");
      }
      token = token.substr(0, caret);
    }
    letters.push_back({base->letter(token), exponent});
  }
  return ClassicalWord(base, std::move(letters));
}

ClassicalWord classical_mul(const ClassicalWord& a, const ClassicalWord& b) {
  if (!same_alphabet(a.base(), b.base()))
    throw InputError("classical_mul: words over different alphabets");
  std::vector<SignedLetter> stack = a.letters();
  for (const auto& letter : b.letters()) push_cancel(stack, letter);
  return ClassicalWord(a.base(), std::move(stack));
}

ClassicalWord classical_inv(const ClassicalWord& a) {
  std::vector<SignedLetter> out(a.letters().rbegin(), a.letters().rend());
  for (auto& letter : out) letter.exponent = -letter.exponent;
  return ClassicalWord(a.base(), std::move(out));
}

ClassicalWord to_classical(const PointedWord& w) {
  const auto& alphabet = w.alphabet();
  std::vector<SignedLetter> stack;
  const auto& letters = w.word().letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == alphabet->point()) continue;
    push_cancel(stack, {letters[i], i % 2 == 0 ? 1 : -1});
  }
  return ClassicalWord(w.base(), std::move(stack));
}

PointedWord from_classical(const ClassicalWord& c) {
  const auto pointed = Alphabet::with_point(c.base());
  const Letter star = pointed->point();
  std::vector<Letter> out;
  out.reserve(2 * c.length() + 1);
  bool next_positive = true;
  for (const auto& letter : c.letters()) {
    if ((letter.exponent > 0) != next_positive) {
      out.push_back(star);
      next_positive = !next_positive;
    }
    out.push_back(letter.letter);
    next_positive = !next_positive;
  }
  if (next_positive) out.push_back(star);
  return PointedWord(HeapWord(pointed, std::move(out)));
}

std::vector<ClassicalWord> enumerate_classical(const AlphabetPtr& base,
                                               std::size_t max_length) {
  const std::size_t symbols = 2 * base->size();
  auto decode = [](std::size_t k) {
    return SignedLetter{static_cast<Letter>(k / 2), k % 2 ? -1 : 1};
  };
  // Index of the inverse of signed letter k.
  auto inverse = [](std::size_t k) { return k ^ 1u; };

  std::vector<ClassicalWord> out{ClassicalWord::identity(base)};
  for (std::size_t length = 1; length <= max_length; ++length) {
    std::vector<std::size_t> current(length);
    auto fix_from = [&](std::size_t i) {
      for (; i < length; ++i)
        current[i] = (i > 0 && inverse(current[i - 1]) == 0) ? 1 : 0;
    };
    fix_from(0);
    while (true) {
      std::vector<SignedLetter> letters;
      for (std::size_t k : current) letters.push_back(decode(k));
      out.emplace_back(base, std::move(letters));
      std::size_t i = length;
      bool advanced = false;
      while (i > 0) {
        --i;
        std::size_t next = current[i] + 1;
        if (i > 0 && next == inverse(current[i - 1])) ++next;
        if (next < symbols) {
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

}  // namespace heapgr
