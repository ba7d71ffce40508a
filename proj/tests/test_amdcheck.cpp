#include <doctest.h>

#include <json.hpp>

#include "amd/amdcheck.hpp"
#include "amd/fixtures.hpp"
#include "amd/varieties.hpp"
#include "test_support.hpp"

using namespace amd;

namespace {

GradedIdeal rational_quartic() {
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(4)"));
  return project_from_point(s.ideal, parse_point("e2", 5, kDefaultPrime)).ideal;
}

GradedIdeal ideal_of(int nvars, std::initializer_list<const char*> gens) {
  const RingPtr R = make_ring(nvars, "x");
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, R));
  return GradedIdeal(R, ps);
}

const CheckResult* find_check(const AnalysisReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

AnalysisOptions scroll_projection_options() {
  AnalysisOptions o;
  o.scroll_projection = true;
  return o;
}

}  // namespace

TEST_CASE("closed forms against independent computations") {
  for (int r = 2; r <= 12; ++r)
    for (int d = 1; d < r; ++d)
      for (int t = 1; t <= d + 1; ++t) {
        IntPoly a = almost_minimal_numerator(r, d, t);
        CHECK(a == amdtest::expected_amd_numerator(r, d, t));
      }
  CHECK_THROWS_AS(almost_minimal_numerator(4, 2, 4), Error);
  CHECK_THROWS_AS(almost_minimal_numerator(4, 2, 0), Error);

  // the middle numbers are the Eagon-Northcott numbers of a scroll of codimension r - d - 1
  for (int c = 2; c <= 5; ++c) {
    const Scroll y = scroll_ideal(ScrollSpec{{c + 1}, -1});
    const BettiTable b = minimalize(free_resolution(y.ideal)).betti;
    for (int i = 1; i <= c; ++i) CHECK(containing_scroll_betti(c + 5, 4, i) == b.at(i, i + 1));
  }

  // the outer numbers are the Betti numbers of B as a module over the projected ring
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,3)"));
  const Projection pr = project_from_point(s.ideal, random_point_off(s.ideal, 4));
  Matrix A;
  for (const auto& l : pr.coords.x_of_y) A.push_back(l.coeffs);
  std::vector<Polynomial> moved;
  for (const auto& g : s.ideal.generators()) moved.push_back(apply_linear_change(g, A));
  const RestrictedScalars rs = restrict_scalars_presentation(GradedIdeal(s.ideal.ring(), moved), pr.coords.pivot);
  const BettiTable bb = minimalize(free_resolution(rs.relations)).betti;
  for (int i = 1; i <= 3; ++i) CHECK(projecting_ring_betti(5, 2, i) == bb.at(i, i + 1));
  CHECK(projecting_ring_betti(5, 2, 4) == 0);
}

TEST_CASE("rational quartic curve in P^3") {
  const AnalysisReport rep = analyze(rational_quartic(), scroll_projection_options());
  CHECK(rep.is_AMD);
  CHECK(rep.r == 3);
  CHECK(rep.d == 1);
  CHECK(rep.degree == 4);
  CHECK(rep.t == 1);
  CHECK(rep.reg == 2);
  CHECK(rep.quadric_count == 1);
  CHECK(rep.delta_genus == 0);
  CHECK(rep.sectional_genus == 0);
  CHECK(rep.secant_cone_dim == 0);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  REQUIRE(find_check(rep, "hilbert_formula"));
  REQUIRE(find_check(rep, "betti.u1_exact"));
  REQUIRE(find_check(rep, "deficiency.Kt_hilbert"));
}

TEST_CASE("complete intersections of two quadrics are Gorenstein of almost minimal degree") {
  const GradedIdeal curve = ideal_of(4, {"x0*x1 - x2*x3", "x0^2 + x1^2 + x2^2 + 3*x3^2 - x0*x3"});
  const AnalysisReport rep = analyze(curve);
  CHECK(rep.is_AMD);
  CHECK(rep.is_ACM);
  CHECK(rep.is_Gorenstein);
  CHECK(rep.t == 2);
  CHECK(rep.delta_genus == 1);
  CHECK(rep.sectional_genus == 1);
  CHECK(rep.all_pass());

  const GradedIdeal surface = ideal_of(5, {"x0*x1 - x2*x3", "x0^2 + x1^2 + x2^2 + x3^2 + x4^2"});
  const AnalysisReport s = analyze(surface);
  CHECK(s.is_AMD);
  CHECK(s.is_Gorenstein);
  CHECK(s.t == 3);
  CHECK(s.all_pass());
  CHECK_FALSE(s.secant_cone_dim.has_value());
}

TEST_CASE("the Pfaffian example") {
  const AnalysisReport rep = analyze(pfaffian_fixture());
  CHECK(rep.is_AMD);
  CHECK(rep.is_Gorenstein);
  CHECK(rep.d == 6);
  CHECK(rep.t == 7);
  CHECK(rep.all_pass());
}

TEST_CASE("negative controls") {
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,3)"));
  const AnalysisReport scroll = analyze(s.ideal);
  CHECK_FALSE(scroll.is_AMD);
  CHECK(scroll.is_minimal_degree);
  CHECK(find_check(scroll, "hilbert_formula") == nullptr);
  CHECK_THROWS_AS(check_hilbert_formula(scroll, scroll.hilbert), Error);
  CHECK_THROWS_AS(check_quadric_count(scroll), Error);

  const AnalysisReport ci = analyze(ideal_of(4, {"x0*x1 - x2*x3", "x0^3 + x1^3 + x2^3 + x3^3"}));
  CHECK(ci.degree == 6);
  CHECK_FALSE(ci.is_AMD);
  CHECK_FALSE(ci.is_minimal_degree);

  CHECK_THROWS_AS(analyze(ideal_of(3, {})), Error);
  CHECK_THROWS_AS(analyze(ideal_of(3, {"x0 + 1"})), Error);
  CHECK_THROWS_AS(analyze(ideal_of(3, {"x0^2 + x1"})), Error);
}

TEST_CASE("perturbed data fail the checks") {
  const AnalysisReport rep = analyze(rational_quartic(), scroll_projection_options());
  HilbertData bad = rep.hilbert;
  bad.numerator.resize(std::max<std::size_t>(bad.numerator.size(), 3), 0);
  bad.numerator[2] += 1;
  CHECK_FALSE(check_hilbert_formula(rep, bad).pass);

  AnalysisReport shifted = rep;
  shifted.quadric_count += 1;
  CHECK_FALSE(check_quadric_count(shifted).pass);

  BettiTable b = *rep.betti;
  b.add(1, 2, 1);
  bool any_fail = false;
  for (const auto& c : check_betti_bounds(rep, b)) any_fail |= !c.pass;
  CHECK(any_fail);

  BettiTable wrong_shape = *rep.betti;
  wrong_shape.add(1, 4, 1);
  const auto checks = check_betti_bounds(rep, wrong_shape);
  REQUIRE_FALSE(checks.empty());
  CHECK(checks.front().name == "betti.shape");
  CHECK_FALSE(checks.front().pass);

  std::map<int, GradedModuleData> K = rep.deficiency;
  K.at(1).hilbert[-1] = 2;
  bool kt_fail = false;
  for (const auto& c : check_deficiency_shapes(rep, K))
    if (c.name == "deficiency.Kt_hilbert") kt_fail = !c.pass;
  CHECK(kt_fail);
}

TEST_CASE("hyperplane sections") {
  const GradedIdeal surface = ideal_of(5, {"x0*x1 - x2*x3", "x0^2 + x1^2 + x2^2 + x3^2 + x4^2"});
  const HyperplaneSection h = hyperplane_section(surface, std::nullopt, 3);
  CHECK(h.ideal.nvars() == 4);
  CHECK(h.depth_before == 3);
  CHECK(h.depth_after == 2);
  const DimensionDegree dd = dimension_degree(hilbert_series(h.ideal));
  CHECK(dd.dim == 1);
  CHECK(dd.degree == 4);

  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,3)"));
  const GradedIdeal X = project_from_point(s.ideal, random_point_off(s.ideal, 8)).ideal;
  const HyperplaneSection c = hyperplane_section(X, std::nullopt, 5);
  CHECK(c.depth_delta() >= 0);
  CHECK(c.depth_delta() <= 1);
  const DimensionDegree cd = dimension_degree(hilbert_series(c.ideal));
  CHECK(cd.dim == 1);
  CHECK(cd.degree == 5);

  // a form in the ideal is rejected
  const RingPtr R = surface.ring();
  LinearForm x0{std::vector<std::uint32_t>{1, 0, 0, 0, 0}};
  CHECK_NOTHROW(hyperplane_section(surface, x0, 1));
  const GradedIdeal plane = ideal_of(5, {"x0", "x1*x2"});
  CHECK_THROWS_AS(hyperplane_section(plane, x0, 1), Error);
}

TEST_CASE("report serialization") {
  const AnalysisReport rep = analyze(rational_quartic(), scroll_projection_options());
  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j.at("degree") == 4);
  CHECK(j.at("checks").is_array());
  CHECK(j.at("checks").size() == rep.checks.size());
  CHECK(rep.to_text().find("ACM: no") != std::string::npos);
}

TEST_CASE("fixture registry and expectations") {
  int core = 0;
  for (const auto& fx : fixture_registry()) core += fx.core;
  CHECK(core == 8);
  CHECK_THROWS_AS(find_fixture("ex9.9"), Error);

  const Fixture& fx = find_fixture("ex6.3A");
  const VerifyResult ok = verify_fixture(fx);
  CHECK(ok.pass());

  FixtureExpectation e = fx.expect;
  override_expectation(e, "t=2");
  bool t_failed = false;
  for (const auto& c : compare_expectation(e, ok.report))
    if (c.name == "expect.t") t_failed = !c.pass;
  CHECK(t_failed);
  override_expectation(e, "u1=99");
  CHECK(e.u.at(0) == 99);
  CHECK_THROWS_AS(override_expectation(e, "colour=3"), Error);
  CHECK_THROWS_AS(override_expectation(e, "t"), Error);
  CHECK_THROWS_AS(override_expectation(e, "t=x"), Error);

  const auto j = nlohmann::json::parse(ok.to_json());
  CHECK(j.at("fixture") == "ex6.3A");
  CHECK(j.at("pass") == true);
  CHECK(j.contains("checks"));
}
