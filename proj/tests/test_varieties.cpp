#include <doctest.h>

#include <algorithm>
#include <random>

#include "amd/amdcheck.hpp"
#include "amd/generic.hpp"
#include "amd/varieties.hpp"
#include "test_support.hpp"

using namespace amd;

namespace {

DimensionDegree dd(const GradedIdeal& I) { return dimension_degree(hilbert_series(I)); }

// A N B after the coordinate change x -> M x, written back as a LinearMatrix.
LinearMatrix conjugate(const LinearMatrix& N, const Matrix& A, const Matrix& B, const Matrix& M) {
  const Zp& f = N.ring->field();
  const std::size_t nv = static_cast<std::size_t>(N.ring->nvars());
  const int c = N.cols();
  auto combo = [&](const std::vector<std::pair<const LinearForm*, std::uint32_t>>& parts) {
    LinearForm out{std::vector<std::uint32_t>(nv, 0)};
    for (const auto& [l, s] : parts)
      for (std::size_t k = 0; k < nv; ++k) out.coeffs[k] = f.add(out.coeffs[k], f.mul(s, l->coeffs[k]));
    return out;
  };
  LinearMatrix rows = N;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < c; ++k)
      rows.rows[r][k] = combo({{&N.rows[0][k], A[r][0]}, {&N.rows[1][k], A[r][1]}});
  LinearMatrix out = rows;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < c; ++k) {
      std::vector<std::pair<const LinearForm*, std::uint32_t>> parts;
      for (int j = 0; j < c; ++j) parts.push_back({&rows.rows[r][j], B[j][k]});
      out.rows[r][k] = combo(parts);
    }
  for (auto& row : out.rows)
    for (auto& l : row) {
      LinearForm moved{std::vector<std::uint32_t>(nv, 0)};
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) moved.coeffs[j] = f.add(moved.coeffs[j], f.mul(l.coeffs[i], M[i][j]));
      l = moved;
    }
  return out;
}

}  // namespace

TEST_CASE("scroll specifications") {
  const ScrollSpec s = ScrollSpec::parse("S(2,2,6)");
  CHECK(s.degrees == std::vector<int>{2, 2, 6});
  CHECK(s.n() == 12);
  CHECK(s.nvars() == 13);
  CHECK(s.dim() == 3);
  CHECK(s.degree() == 10);
  CHECK(s.str() == "S(2,2,6)");

  const ScrollSpec cone = ScrollSpec::parse("S(1,1,2)+vertex:0");
  CHECK(cone.vertex == 0);
  CHECK(cone.n() == 6);
  CHECK(cone.nvars() == 8);
  CHECK(cone.dim() == 4);
  CHECK(ScrollSpec::parse(cone.str()).str() == cone.str());

  for (const char* bad : {"S(3,2)", "S(1)", "T(2)", "S(2)+cone", "S(2,x)", "S()", "S(0,2)"})
    CHECK_THROWS_AS(scroll_ideal(ScrollSpec::parse(bad)), Error);
}

TEST_CASE("scroll matrices") {
  const Scroll c = scroll_ideal(ScrollSpec::parse("S(2)"));
  REQUIRE(c.matrix.cols() == 2);
  CHECK(c.ideal.generators().size() == 1);
  CHECK(c.ideal.contains(parse_polynomial("x0*x2 - x1^2", c.ideal.ring())));

  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,2,6)"));
  CHECK(s.matrix.cols() == 10);
  CHECK(s.ideal.generators().size() == 45);
  // blocks start at x0, x3, x6 and each is a Hankel strip
  CHECK(s.matrix.entry(0, 2).str() == "x3");
  CHECK(s.matrix.entry(1, 3).str() == "x5");
  CHECK(s.matrix.entry(1, 9).str() == "x12");
  const DimensionDegree d = dd(s.ideal);
  CHECK(d.dim == 3);
  CHECK(d.degree == 10);

  const Scroll k = scroll_ideal(ScrollSpec::parse("S(2,3)+vertex:1"));
  CHECK(k.vertex_vars == std::vector<int>{7, 8});
  const DimensionDegree kd = dd(k.ideal);
  CHECK(kd.dim == 4);
  CHECK(kd.degree == 5);
}

TEST_CASE("scrolls and cones over them have minimal degree") {
  for (const char* spec : {"S(2)", "S(4)", "S(2,3)", "S(1,1,2)", "S(2,2)+vertex:0", "S(3)+vertex:1"}) {
    const Scroll s = scroll_ideal(ScrollSpec::parse(spec));
    AnalysisOptions o;
    o.deficiency = false;
    const AnalysisReport rep = analyze(s.ideal, o);
    CHECK_MESSAGE(rep.is_minimal_degree, spec);
    CHECK_MESSAGE(rep.is_ACM, spec);
    CHECK_MESSAGE(rep.reg == 1, spec);
    CHECK_FALSE(rep.is_AMD);
    CHECK(rep.degree == rep.codim + 1);
  }
}

TEST_CASE("Veronese surface and Pfaffians") {
  const GradedIdeal V = veronese_ideal();
  CHECK(V.generators().size() == 6);
  const DimensionDegree v = dd(V);
  CHECK(v.dim == 2);
  CHECK(v.degree == 4);

  const GradedIdeal P = pfaffian_fixture();
  CHECK(P.generators().size() == 5);
  const DimensionDegree p = dd(P);
  CHECK(p.dim == 6);
  CHECK(p.codim == 3);
  CHECK(p.degree == 5);
}

TEST_CASE("projection from a point") {
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,3)"));
  CHECK_THROWS_AS(project_from_point(s.ideal, parse_point("e0", 7, kDefaultPrime)), Error);  // on X
  CHECK_THROWS_AS(project_from_point(s.ideal, Point(7, 0)), Error);
  CHECK_THROWS_AS(project_from_point(s.ideal, Point(6, 1)), Error);
  CHECK_THROWS_AS(parse_point("e7", 7, kDefaultPrime), Error);

  const Projection pr = project_from_point(s.ideal, random_point_off(s.ideal, 3));
  CHECK(pr.ideal.nvars() == 6);
  const DimensionDegree d = dd(pr.ideal);
  CHECK(d.dim == 2);
  CHECK(d.degree == 5);
  // the coordinate changes are mutually inverse
  const Zp& f = s.ideal.ring()->field();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      std::uint32_t acc = 0;
      for (int k = 0; k < 7; ++k) acc = f.add(acc, f.mul(pr.coords.x_of_y[a].coeffs[k], pr.coords.y_of_x[k].coeffs[b]));
      CHECK(acc == (a == b ? 1u : 0u));
    }
  // every generator of the image vanishes on the projected curve points
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> coord(0, f.p - 1);
  for (int trial = 0; trial < 20; ++trial) {
    // a point of S(2,3): (u s^2, u s t, u t^2, v s^3, v s^2 t, v s t^2, v t^3)
    const std::uint32_t S = coord(rng), T = coord(rng), U = coord(rng), W = coord(rng);
    Point x{f.mul(U, f.mul(S, S)), f.mul(U, f.mul(S, T)), f.mul(U, f.mul(T, T)),
            f.mul(W, f.pow(S, 3)), f.mul(W, f.mul(f.mul(S, S), T)), f.mul(W, f.mul(S, f.mul(T, T))), f.mul(W, f.pow(T, 3))};
    for (const auto& g : s.ideal.generators()) REQUIRE(g.evaluate(x) == 0);
    Point y;
    for (int a = 0; a < 7; ++a) {
      if (a == pr.coords.pivot) continue;
      std::uint32_t acc = 0;
      for (int k = 0; k < 7; ++k) acc = f.add(acc, f.mul(pr.coords.y_of_x[a].coeffs[k], x[k]));
      y.push_back(acc);
    }
    for (const auto& g : pr.ideal.generators()) CHECK(g.evaluate(y) == 0);
  }
}

TEST_CASE("projection from a secant point drops the degree") {
  const Scroll q = scroll_ideal(ScrollSpec::parse("S(4)"));
  const GradedIdeal C = project_from_point(q.ideal, parse_point("e1", 5, kDefaultPrime)).ideal;
  CHECK(dd(C).degree == 4);
  // the point where only the coordinate of s t^3 is nonzero sees every fibre of (s:t) -> (s^2:t^2) twice
  const GradedIdeal D = project_from_point(C, parse_point("e2", 4, kDefaultPrime)).ideal;
  const DimensionDegree d = dd(D);
  CHECK(d.dim == 1);
  CHECK(d.degree == 2);
}

TEST_CASE("scroll normal form recovers the block degrees") {
  std::mt19937_64 seeds(11);
  for (const char* spec : {"S(2)", "S(2,3)", "S(1,1,2)", "S(2,2,6)", "S(1,3)+vertex:0", "S(2,4,4)"}) {
    const Scroll s = scroll_ideal(ScrollSpec::parse(spec));
    const ScrollNormalForm plain = scroll_normal_form(s.matrix);
    CHECK(plain.blocks == s.spec.degrees);
    CHECK(plain.vertex_dim == s.spec.vertex);
    const Zp& f = s.ideal.ring()->field();
    for (int trial = 0; trial < 5; ++trial) {
      const LinearMatrix N = conjugate(s.matrix, random_invertible(2, f, seeds()),
                                       random_invertible(s.matrix.cols(), f, seeds()),
                                       random_invertible(s.ideal.nvars(), f, seeds()));
      const ScrollNormalForm nf = scroll_normal_form(N);
      CHECK_MESSAGE(nf.blocks == s.spec.degrees, spec);
      CHECK(nf.m == s.spec.n());
      CHECK(nf.vertex_dim == s.spec.vertex);
      // the minors still cut out a variety of the scroll's dimension and degree
      if (s.spec.nvars() <= 8) {
        const DimensionDegree d = dd(GradedIdeal(N.ring, N.minors()));
        CHECK(d.dim == s.spec.dim());
        CHECK(d.degree == s.spec.degree());
      }
    }
  }
}

TEST_CASE("1-generic falsifier") {
  const RingPtr R = make_ring(3, "x", 13);
  auto lf = [&](const char* s) { return LinearForm::from_poly(parse_polynomial(s, R)); };
  LinearForm zero{std::vector<std::uint32_t>(3, 0)};

  LinearMatrix with_zero{R, {{lf("x0"), zero}, {lf("x1"), lf("x2")}}};
  CHECK(one_generic_test(with_zero, 20, 1).falsified);

  LinearMatrix sym{R, {{lf("x0"), lf("x1")}, {lf("x1"), lf("x0")}}};
  const OneGenericResult r = one_generic_test(sym, 20, 1);
  REQUIRE(r.falsified);
  // the witness really gives v N w = 0
  const Zp& f = R->field();
  for (int var = 0; var < 3; ++var) {
    std::uint32_t acc = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        acc = f.add(acc, f.mul(r.v[a], f.mul(sym.rows[a][b].coeffs[var], r.w[b])));
    CHECK(acc == 0);
  }
  CHECK_THROWS_AS(scroll_normal_form(sym), Error);

  for (const char* spec : {"S(2)", "S(1,2)", "S(3,3)"}) {
    const Scroll s = scroll_ideal(ScrollSpec::parse(spec), 13);
    CHECK_FALSE(one_generic_test(s.matrix, 20, 7).falsified);  // 20 > #P^1(F_13): exhaustive
  }
}

TEST_CASE("containing scroll of a projection") {
  struct Case {
    const char* spec;
    const char* point;
  };
  for (const Case c : {Case{"S(2,3)", ""}, Case{"S(4)", "e2"}, Case{"S(2,4,4)", "e1"}, Case{"S(1,1,2)", ""},
                       Case{"S(2,2)+vertex:0", ""}}) {
    const Scroll s = scroll_ideal(ScrollSpec::parse(c.spec));
    const Point p = std::string(c.point).empty() ? random_point_off(s.ideal, 21)
                                                  : parse_point(c.point, s.ideal.nvars(), kDefaultPrime);
    const ContainingScroll cs = containing_scroll(s, p);
    CHECK_MESSAGE(cs.ok(), c.spec);
    CHECK(cs.free_of_pivot);
    CHECK(cs.minors_in_scroll_ideal);
    CHECK(cs.minors_in_image.value_or(false));
    CHECK(cs.dim_scroll == s.spec.dim());
    CHECK(cs.dim_y == s.spec.dim() + 1);
    int total = 0;
    for (int b : cs.normal_form.blocks) total += b;
    CHECK(total == cs.n_matrix.cols());
  }
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,3)"));
  CHECK_THROWS_AS(containing_scroll(s, parse_point("e0", 7, kDefaultPrime)), Error);
}
