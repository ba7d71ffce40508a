#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amd/amdcheck.hpp"
#include "amd/varieties.hpp"

namespace amd {

struct FixtureExpectation {
  int r = 0, d = 0, codim = 0;
  long long degree = 0;
  int t = 0;
  int reg = 2;
  std::vector<long long> u, v;                     // u_i, v_i for i = 1.. (empty: not checked)
  std::map<std::pair<int, int>, long long> betti;  // further exact entries beta_{i,j}
  std::optional<long long> quadrics;
  bool acm = false;
  bool gorenstein = false;
  std::optional<int> secant_cone_dim;
};

struct Fixture {
  std::string name;
  std::string description;
  std::optional<ScrollSpec> scroll;  // projected scroll, or
  std::string builtin;               // "pfaffian" or "veronese"
  std::string point;                 // projection centre; empty for no projection
  bool core = false;                 // part of `verify --all`
  bool non_normal = false;
  FixtureExpectation expect;
};

const std::vector<Fixture>& fixture_registry();
const Fixture& find_fixture(const std::string& name);

struct FixtureInput {
  GradedIdeal ideal;
  std::optional<Scroll> scroll;
  std::optional<Point> point;
};
FixtureInput build_fixture(const Fixture& fx, std::uint32_t prime = kDefaultPrime);

struct VerifyOptions {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  DegreeWindow window{};
  bool progress = false;
};

struct VerifyResult {
  std::string name;
  AnalysisReport report;
  std::vector<CheckResult> checks;  // analysis checks, expectation checks, containing scroll
  double seconds = 0;
  bool pass() const;
  std::string to_json() const;
  std::string to_text() const;
};

std::vector<CheckResult> compare_expectation(const FixtureExpectation& e, const AnalysisReport& rep);
VerifyResult verify_fixture(const Fixture& fx, const VerifyOptions& opts = {});

// Overrides one expected value, "key=value" with key among r, d, codim, degree, t, reg, quadrics,
// secant_cone_dim, u<i>, v<i>.
void override_expectation(FixtureExpectation& e, const std::string& assignment);

}  // namespace amd
