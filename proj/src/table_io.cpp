#include "heapgr/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "heapgr/errors.hpp"

namespace heapgr {
namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Tokenizer {
 public:
  Tokenizer(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::optional<Token> next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t start = pos_, line = line_, column = column_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) advance();
    return Token{text_.substr(start, pos_ - start), line, column};
  }

  Token expect(std::string_view what) {
    auto token = next();
    if (!token) fail_here("unexpected end of input, expected " + std::string(what));
    return *token;
  }

  void expect_keyword(std::string_view keyword) {
    const Token token = expect("'" + std::string(keyword) + "'");
    if (token.text != keyword)
      fail(token.line, token.column,
           "expected header '" + std::string(keyword) + "', got '" +
               std::string(token.text) + "'");
  }

  void expect_end() {
    if (auto token = next())
      fail(token->line, token->column,
           "unexpected trailing token '" + std::string(token->text) + "'");
  }

  [[noreturn]] void fail_here(const std::string& message) const {
    fail(line_, column_, message);
  }

  [[noreturn]] void fail(std::size_t line, std::size_t column,
                         const std::string& message) const {
    throw ParseError(source_, line, column, message);
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::string_view source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::vector<Element> read_entries(Tokenizer& in, std::size_t count,
                                  std::size_t bound, std::string_view what) {
  std::vector<Element> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto token = in.next();
    if (!token) {
      std::ostringstream out;
      out << "expected " << count << " " << what << " entries, found " << i;
      in.fail_here(out.str());
    }
    std::size_t value = 0;
    const char* end = token->text.data() + token->text.size();
    auto [ptr, ec] = std::from_chars(token->text.data(), end, value);
    if (ec != std::errc() || ptr != end)
      in.fail(token->line, token->column,
              "expected an element index, got '" + std::string(token->text) + "'");
    if (value >= bound) {
      std::ostringstream out;
      out << "element " << value << " out of range 0.." << bound - 1;
      in.fail(token->line, token->column, out.str());
    }
    entries.push_back(value);
  }
  in.expect_end();
  return entries;
}

std::size_t read_size(Tokenizer& in, std::string_view what) {
  const Token token = in.expect(what);
  std::size_t value = 0;
  const char* end = token.text.data() + token.text.size();
  auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    in.fail(token.line, token.column,
            "expected a positive " + std::string(what) + ", got '" +
                std::string(token.text) + "'");
  return value;
}

std::string format_rows(const std::string& header, const std::vector<Element>& values,
                        std::size_t per_line) {
  std::ostringstream out;
  out << header << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << values[i];
    out << ((i + 1) % per_line == 0 || i + 1 == values.size() ? '\n' : ' ');
  }
  return out.str();
}

}  // namespace

FiniteHeap parse_heap(std::string_view text, std::string_view source) {
  Tokenizer in(text, source);
  in.expect_keyword("heap");
  const std::size_t n = read_size(in, "heap size");
  if (n > 256) in.fail(1, 1, "heap size above 256 is not supported");
  return FiniteHeap(n, read_entries(in, n * n * n, n, "heap"));
}

GroupTable parse_group_table(std::string_view text, std::string_view source) {
  Tokenizer in(text, source);
  in.expect_keyword("group");
  const std::size_t n = read_size(in, "group order");
  if (n > 4096) in.fail(1, 1, "group order above 4096 is not supported");
  return {n, read_entries(in, n * n, n, "group")};
}

FiniteGroup parse_group(std::string_view text, std::string_view source) {
  auto raw = parse_group_table(text, source);
  return FiniteGroup(raw.size, std::move(raw.table));
}

FiniteMap parse_map(std::string_view text, std::string_view source) {
  Tokenizer in(text, source);
  in.expect_keyword("map");
  const std::size_t n = read_size(in, "domain size");
  const std::size_t m = read_size(in, "codomain size");
  return FiniteMap(n, m, read_entries(in, n, m, "map"));
}

std::string format_heap(const FiniteHeap& heap) {
  return format_rows("heap " + std::to_string(heap.size()), heap.table(),
                     heap.size());
}

std::string format_group(const FiniteGroup& group) {
  return format_rows("group " + std::to_string(group.size()), group.table(),
                     group.size());
}

std::string format_map(const FiniteMap& map) {
  return format_rows("map " + std::to_string(map.domain_size()) + " " +
                         std::to_string(map.codomain_size()),
                     map.image(), std::max<std::size_t>(map.domain_size(), 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace heapgr
