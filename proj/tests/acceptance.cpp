// One line per acceptance criterion. With an argument N only criterion N runs.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heapgr/catalog.hpp"
#include "heapgr/suites.hpp"

namespace {

using heapgr::verify::Checks;

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 means unbounded
  std::function<Checks()> run;
};

std::vector<Criterion> criteria() {
  using namespace heapgr;
  using namespace heapgr::verify;
  const std::uint64_t seed = kDefaultSeed;
  return {
      {1, "heap axioms on the core catalog", 10.0,
       [] {
         Checks out = axiom_checks(core_catalog());
         out.pop_back();  // Abelianness is not part of this criterion
         return out;
       }},
      {2, "retract and associated heap round trips", 0.0,
       [] { return round_trip_checks(core_catalog()); }},
      {3, "free heap reduction, axioms and enumeration", 0.0,
       [seed] { return free_heap_checks(FreeHeapBounds{}, seed); }},
      {4, "free group as the retract at * of a free heap", 30.0,
       [seed] { return free_group_checks(FreeGroupBounds{}, seed); }},
      {5, "universal property of the universal group", 0.0,
       [seed] { return universal_property_checks(3, seed); }},
      {6, "adjunction bijection, counts and naturality", 0.0,
       [] { return adjunction_checks(3); }},
      {7, "monadicity desk checks", 0.0, [] { return monadicity_checks(core_catalog()); }},
      {8, "functoriality of Gr", 0.0, [seed] { return functoriality_checks(3, seed); }},
  };
}

bool report(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Checks checks;
  std::string error;
  try {
    checks = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = error.empty() && heapgr::verify::all_passed(checks);
  std::ostringstream why;
  if (!error.empty()) why << "exception: " << error;
  for (const auto& check : checks)
    if (!check.passed) why << (why.tellp() > 0 ? "; " : "") << check.name << ": " << check.detail;
  if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
    ok = false;
    why << (why.tellp() > 0 ? "; " : "") << "runtime " << elapsed << " s exceeds "
        << c.time_limit_s << " s";
  }

  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
            << checks.size() << " checks";
  if (c.time_limit_s > 0) std::cout << ", " << elapsed << " s, limit " << c.time_limit_s << " s";
  std::cout << ")";
  if (!ok) std::cout << " -- " << why.str();
  std::cout << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool ok = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only && c.number != only) continue;
    ran = true;
    ok = report(c) && ok;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
