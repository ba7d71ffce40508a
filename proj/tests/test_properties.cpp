#include <iostream>

#include "property_suites.hpp"

int main(int argc, char** argv) {
  const int cases = argc > 1 ? std::stoi(argv[1]) : 1000;
  bool ok = true;
  for (const auto& s : amdtest::run_all_suites(cases)) {
    std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.cases << " cases, " << s.failures
              << " failures, " << s.seconds << " s";
    if (!s.ok()) std::cout << " (first: " << s.first_failure << ")";
    std::cout << "\n";
    ok &= s.ok();
  }
  return ok ? 0 : 1;
}
