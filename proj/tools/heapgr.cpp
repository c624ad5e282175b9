#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heapgr/errors.hpp"
#include "heapgr/finite.hpp"
#include "heapgr/free_group.hpp"
#include "heapgr/free_heap.hpp"
#include "heapgr/suites.hpp"
#include "heapgr/table_io.hpp"
#include "heapgr/universal.hpp"

using namespace heapgr;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kInput = 2;

std::size_t parse_index(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw InputError(what + ": expected a non-negative integer, got '" + text + "'");
  return value;
}

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  const bool hex = text.rfind("0x", 0) == 0;
  const char* begin = text.data() + (hex ? 2 : 0);
  const char* end = text.data() + text.size();
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value, hex ? 16 : 10);
  if (ec != std::errc() || ptr != end || begin == end)
    throw InputError(what + ": expected an unsigned integer, got '" + text + "'");
  return value;
}

Element parse_element(const std::string& text, std::size_t size) {
  const std::size_t e = parse_index(text, "element");
  if (e >= size)
    throw InputError("element " + text + " out of range for order " + std::to_string(size));
  return e;
}

SubsetSpec parse_subset(const std::string& text, std::size_t size) {
  std::vector<Element> members;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) members.push_back(parse_element(item, size));
  if (members.empty()) throw InputError("subset: expected a comma-separated list of elements");
  return SubsetSpec(size, std::move(members));
}

FiniteHeap load_heap(const std::string& path, std::size_t max_order) {
  FiniteHeap h = parse_heap(read_file(path), path);
  if (h.size() > max_order)
    throw InputError(path + ": order " + std::to_string(h.size()) + " exceeds --max-order " +
                     std::to_string(max_order));
  return h;
}

void require_heap(const FiniteHeap& h) {
  const AxiomReport report = verify_heap_axioms(h);
  if (!report.passed()) throw DomainError("not a heap: " + describe(report.violations.front()));
}

// Classical tokens are x, x^1 or x^-1.
std::string strip_exponent(const std::string& token) {
  return token.substr(0, token.find('^'));
}

AlphabetPtr infer_base(const std::vector<std::string>& lines, bool classical) {
  std::vector<std::string> stripped;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string token, out;
    while (in >> token) out += (classical ? strip_exponent(token) : token) + " ";
    stripped.push_back(out);
  }
  return Alphabet::infer(stripped);
}

int cmd_check_heap(const std::string& path, std::size_t max_order) {
  const FiniteHeap h = load_heap(path, max_order);
  const AxiomReport report = verify_heap_axioms(h);
  if (!report.passed()) {
    for (const auto& v : report.violations) std::cout << "FAIL " << describe(v) << '\n';
    return kDomain;
  }
  std::cout << "ok: heap of order " << h.size() << '\n';
  std::cout << "abelian: " << (is_abelian(h) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_check_group(const std::string& path) {
  const GroupTable raw = parse_group_table(read_file(path), path);
  if (const auto violation = verify_group_laws(raw.size, raw.table)) {
    std::cout << "FAIL " << describe(*violation) << '\n';
    return kDomain;
  }
  const FiniteGroup g(raw.size, raw.table);
  std::cout << "ok: group of order " << g.size() << ", identity " << g.identity() << '\n';
  return kOk;
}

int cmd_retract(const std::string& path, const std::string& e, std::size_t max_order) {
  const FiniteHeap h = load_heap(path, max_order);
  const Element base = parse_element(e, h.size());
  require_heap(h);
  std::cout << format_group(retract(h, base));
  return kOk;
}

int cmd_assoc(const std::string& path) {
  std::cout << format_heap(associated_heap(parse_group(read_file(path), path)));
  return kOk;
}

int cmd_quotient(const std::string& path, const std::string& subset, const std::string& e,
                 std::size_t max_order) {
  const FiniteHeap h = load_heap(path, max_order);
  const SubsetSpec s = parse_subset(subset, h.size());
  const Element base = parse_element(e, h.size());
  require_heap(h);
  const HeapQuotient q = quotient(h, s, base);
  std::cout << format_heap(q.heap) << format_map(q.projection);
  return kOk;
}

int cmd_heap_op(const std::string& u, const std::string& v, const std::string& w) {
  const std::vector<std::string> lines{u, v, w};
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string token;
    while (in >> token)
      if (token == kPointSymbol)
        throw InputError("'*' is not a letter of a free heap word");
  }
  const AlphabetPtr alphabet = Alphabet::infer(lines);
  std::cout << ternary(parse_word(alphabet, u), parse_word(alphabet, v), parse_word(alphabet, w)).str()
            << '\n';
  return kOk;
}

int cmd_fg(const std::string& op, const std::vector<std::string>& args) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw InputError("fg " + op + ": expected " + std::to_string(n) + " word argument" +
                       (n == 1 ? "" : "s"));
  };
  if (op == "mul") {
    arity(2);
    const AlphabetPtr base = infer_base(args, false);
    std::cout << fg_mul(parse_pointed(base, args[0]), parse_pointed(base, args[1])).str() << '\n';
  } else if (op == "inv") {
    arity(1);
    const AlphabetPtr base = infer_base(args, false);
    std::cout << fg_inv(parse_pointed(base, args[0])).str() << '\n';
  } else if (op == "to-classical") {
    arity(1);
    const AlphabetPtr base = infer_base(args, false);
    std::cout << to_classical(parse_pointed(base, args[0])).str() << '\n';
  } else if (op == "from-classical") {
    arity(1);
    const AlphabetPtr base = infer_base(args, true);
    std::cout << from_classical(parse_classical(base, args[0])).str() << '\n';
  } else {
    throw InputError("fg: unknown operation '" + op + "'");
  }
  return kOk;
}

int cmd_gr_demo(const std::string& path, const std::string& e, std::size_t max_order) {
  const FiniteHeap h = load_heap(path, max_order);
  const Element base = parse_element(e, h.size());
  require_heap(h);
  const UniversalGroup u(h, base);
  std::cout << "heap order " << h.size() << ", basepoint " << base << '\n';
  std::cout << "A = retract at " << base << ", order " << u.base().size() << '\n';
  for (Element x = 0; x < h.size(); ++x)
    std::cout << "iota(" << x << ") = " << u.format(u.iota(x)) << '\n';
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      for (Element c = 0; c < h.size(); ++c)
        if (u.iota(h(a, b, c)) != u.mul(u.mul(u.iota(a), u.inv(u.iota(b))), u.iota(c))) {
          std::ostringstream msg;
          msg << "iota is not a heap hom at (" << a << "," << b << "," << c << ")";
          throw DomainError(msg.str());
        }
  std::cout << "iota is an injective heap hom: yes\n";
  // H = H(A) on the same carrier, so the identity map extends to a counit.
  const UniversalHom counit = universal_extension(u, FiniteMap::identity(h.size()), u.base());
  std::cout << "counit sends t to " << counit.tau_image() << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> max_size,
               std::optional<std::string> seed_text) {
  verify::SuiteOptions options;
  options.max_size = max_size;
  if (!seed_text)
    if (const char* env = std::getenv("HEAPGR_SEED")) seed_text = env;
  if (seed_text) options.seed = parse_seed(*seed_text, "seed");
  const verify::Checks checks = verify::run_suite(suite, options);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += !c.passed;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed ? kDomain : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite heaps, free heaps, free groups and the universal group of a heap"};
  app.require_subcommand(1);

  std::size_t max_order = 24;
  auto add_max_order = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", max_order, "Largest accepted heap order")->capture_default_str();
  };

  std::string file, elem, subset, u, v, w, fg_op, suite;
  std::vector<std::string> fg_args;
  std::optional<std::size_t> max_size;
  std::optional<std::string> seed;

  auto* check_heap = app.add_subcommand("check-heap", "Verify the heap axioms of a table file");
  check_heap->add_option("FILE", file)->required();
  add_max_order(check_heap);

  auto* check_group = app.add_subcommand("check-group", "Verify the group laws of a table file");
  check_group->add_option("FILE", file)->required();

  auto* retract_cmd = app.add_subcommand("retract", "Print the retract of a heap at E");
  retract_cmd->add_option("FILE", file)->required();
  retract_cmd->add_option("E", elem)->required();
  add_max_order(retract_cmd);

  auto* assoc = app.add_subcommand("assoc", "Print the associated heap of a group");
  assoc->add_option("FILE", file)->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient of a heap by a normal sub-heap");
  quotient_cmd->add_option("FILE", file)->required();
  quotient_cmd->add_option("SUBSET", subset, "Comma-separated elements")->required();
  quotient_cmd->add_option("E", elem)->required();
  add_max_order(quotient_cmd);

  auto* heap_op = app.add_subcommand("heap-op", "Ternary operation of the free heap");
  heap_op->add_option("U", u)->required();
  heap_op->add_option("V", v)->required();
  heap_op->add_option("W", w)->required();

  auto* fg = app.add_subcommand("fg", "Free group as the retract at * of a free heap");
  fg->add_option("OP", fg_op, "mul, inv, to-classical or from-classical")->required();
  fg->add_option("ARGS", fg_args)->required();

  auto* gr = app.add_subcommand("gr", "Universal group of a heap");
  gr->require_subcommand(1);
  auto* demo = gr->add_subcommand("demo", "Show the unit of the universal group");
  demo->add_option("FILE", file)->required();
  demo->add_option("E", elem)->required();
  add_max_order(demo);

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--max-size", max_size, "Size bound for the suite");
  verify_cmd->add_option("--seed", seed, "Random seed (env HEAPGR_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInput;
  }

  try {
    if (*check_heap) return cmd_check_heap(file, max_order);
    if (*check_group) return cmd_check_group(file);
    if (*retract_cmd) return cmd_retract(file, elem, max_order);
    if (*assoc) return cmd_assoc(file);
    if (*quotient_cmd) return cmd_quotient(file, subset, elem, max_order);
    if (*heap_op) return cmd_heap_op(u, v, w);
    if (*fg) return cmd_fg(fg_op, fg_args);
    if (*demo) return cmd_gr_demo(file, elem, max_order);
    if (*verify_cmd) return cmd_verify(suite, max_size, seed);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
