#include <doctest.h>

#include "amd/groebner.hpp"
#include "amd/hilbert.hpp"
#include "amd/linalg.hpp"
#include "amd/varieties.hpp"
#include "test_support.hpp"

using namespace amd;

namespace {

Polynomial P(const std::string& s, const RingPtr& R) { return parse_polynomial(s, R); }

GradedIdeal twisted_cubic(const RingPtr& R) {
  return GradedIdeal(R, {P("x0*x2 - x1^2", R), P("x0*x3 - x1*x2", R), P("x1*x3 - x2^2", R)});
}

// Moves a polynomial of a ring on a subset of the variables back into R by name.
Polynomial lift(const Polynomial& g, const RingPtr& R) {
  std::vector<Polynomial> forms;
  for (const auto& n : g.ring()->names()) forms.push_back(Polynomial::variable(R, R->index_of(n)));
  return substitute(g, forms, R);
}

bool uses_variable(const Polynomial& f, int v) {
  for (const auto& t : f.terms())
    if (t.m.e[v]) return true;
  return false;
}

}  // namespace

TEST_CASE("small Groebner bases") {
  const RingPtr R = make_ring(4, "x");
  const GradedIdeal I(R, {P("x0", R)});
  REQUIRE(I.gb().elements.size() == 1);
  CHECK(I.gb().elements[0] == P("x0", R));

  // S-pairs of the twisted cubic minors all reduce to 0, so the minors are their own basis
  const GradedIdeal C = twisted_cubic(R);
  const auto& gb = C.gb().elements;
  CHECK(gb.size() == 3);
  for (const auto& g : C.generators()) {
    bool found = false;
    for (const auto& h : gb) found |= h == g.monic();
    CHECK(found);
  }
  CHECK(satisfies_buchberger_criterion(C.gb()));
}

TEST_CASE("scroll GB is quadratic") {
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,2,6)"));
  for (const auto& g : s.ideal.gb().elements) CHECK(g.degree() == 2);
  const DimensionDegree dd = dimension_degree(hilbert_series(s.ideal));
  CHECK(dd.dim == 3);
  CHECK(dd.degree == 10);
}

TEST_CASE("normal forms") {
  const RingPtr R = make_ring(4, "x");
  const GradedIdeal C = twisted_cubic(R);
  for (const auto& g : C.generators()) CHECK(normal_form(g, C.gb()).is_zero());
  CHECK(normal_form(Polynomial::constant(R, 1), C.gb()) == Polynomial::constant(R, 1));
  CHECK(normal_form(P("x1^2", R), C.gb()) == P("x0*x2", R));
}

TEST_CASE("elimination") {
  const RingPtr R = make_ring(2, "x");
  CHECK(eliminate(GradedIdeal(R, {P("x0 - x1", R)}), {0}).is_zero());
  CHECK(eliminate(GradedIdeal(R, {P("x0^2", R), P("x0*x1", R)}), {0}).is_zero());
  CHECK_THROWS_AS(eliminate(GradedIdeal(R, {P("x0", R)}), {}), Error);
  CHECK_THROWS_AS(eliminate(GradedIdeal(R, {P("x0", R)}), {0, 1}), Error);

  // rational quartic curve in P^3: Hilbert polynomial 4m + 1
  const Scroll s4 = scroll_ideal(ScrollSpec::parse("S(4)"));
  const GradedIdeal Q = eliminate(s4.ideal, {2});
  const HilbertData h = hilbert_series(Q);
  CHECK(Q.nvars() == 4);
  for (int m = 0; m < 8; ++m) CHECK(h.hilbert_polynomial(m) == 4 * m + 1);
}

TEST_CASE("saturation and quotients") {
  const RingPtr R = make_ring(4, "x");
  CHECK(same_ideal(saturate(GradedIdeal(R, {P("x0*x1", R)}), P("x0", R)), GradedIdeal(R, {P("x1", R)})));
  const GradedIdeal C = twisted_cubic(R);
  CHECK(same_ideal(saturate(C, P("x0", R)), C));
  CHECK_THROWS_AS(saturate(C, Polynomial(R)), Error);

  CHECK(same_ideal(ideal_quotient(C, GradedIdeal(R, {Polynomial::constant(R, 1)})), C));
  CHECK(same_ideal(ideal_quotient(GradedIdeal(R, {P("x0^2", R)}), GradedIdeal(R, {P("x0", R)})),
                   GradedIdeal(R, {P("x0", R)})));
  CHECK(ideal_quotient(C, C).contains(Polynomial::constant(R, 1)));
}

TEST_CASE("saturating I + (l) for a Del Pezzo surface gives a curve of degree r") {
  // S(2,3) projected from e1: the surface of almost minimal degree 5 in P^5
  const Scroll s = scroll_ideal(ScrollSpec::parse("S(2,3)"));
  const Point p = parse_point("e1", s.ideal.nvars(), s.ideal.ring()->prime());
  const GradedIdeal X = project_from_point(s.ideal, p).ideal;
  const RingPtr& R = X.ring();
  std::mt19937_64 rng(5);
  const Polynomial l = amdtest::random_homogeneous(R, 1, 6, rng);
  std::vector<Polynomial> gens = X.generators();
  gens.push_back(l);
  const GradedIdeal sat = saturate_irrelevant(GradedIdeal(R, gens), 9);
  const DimensionDegree dd = dimension_degree(hilbert_series(sat));
  CHECK(dd.dim == 1);
  CHECK(dd.degree == 5);
}

TEST_CASE("syzygies") {
  const RingPtr R = make_ring(2, "x");
  const GradedSubmodule K = syzygies(std::vector<Polynomial>{P("x0", R), P("x1", R)});
  REQUIRE(K.generators().size() == 1);
  const auto& e = K.generators()[0].entries;
  CHECK(((e[0] == P("x1", R) && e[1] == P("-x0", R)) || (e[0] == P("-x1", R) && e[1] == P("x0", R))));

  const RingPtr R4 = make_ring(4, "x");
  const GradedSubmodule T = syzygies(twisted_cubic(R4).generators());
  CHECK(T.generators().size() == 2);
  for (const auto& g : T.generators()) CHECK(g.degree(T.ambient()) == 3);
}

TEST_CASE("Pfaffian syzygies are the columns of the skew matrix") {
  const GradedIdeal I = pfaffian_fixture();
  const RingPtr& R = I.ring();
  REQUIRE(I.generators().size() == 5);
  for (const auto& g : I.generators()) CHECK(g.degree() == 2);

  // the skew matrix, entries numbered along the upper triangle row by row
  int idx[5][5] = {};
  int v = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) idx[i][j] = v++;
  auto m = [&](int i, int j) -> Polynomial {
    if (i == j) return Polynomial(R);
    return i < j ? Polynomial::variable(R, idx[i][j]) : -Polynomial::variable(R, idx[j][i]);
  };
  // signed Pfaffian vector: M * pf = 0
  std::vector<Polynomial> pf;
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<int> k;
    for (int i = 0; i < 5; ++i)
      if (i != drop) k.push_back(i);
    Polynomial q = m(k[0], k[1]) * m(k[2], k[3]) - m(k[0], k[2]) * m(k[1], k[3]) + m(k[0], k[3]) * m(k[1], k[2]);
    pf.push_back(drop % 2 ? -q : q);
  }
  for (int i = 0; i < 5; ++i) {
    Polynomial row(R);
    for (int j = 0; j < 5; ++j) row = row + m(i, j) * pf[j];
    CHECK(row.is_zero());
  }
  CHECK(same_ideal(I, GradedIdeal(R, pf)));

  const GradedSubmodule Z = syzygies(pf);
  REQUIRE(Z.generators().size() == 5);
  // compare spans of linear syzygies and matrix rows inside S_1^5 (50 coordinates)
  auto flat = [&](const std::vector<Polynomial>& col) {
    Vec out(50, 0);
    for (int j = 0; j < 5; ++j) {
      REQUIRE((col[j].is_zero() || col[j].degree() == 1));
      const LinearForm l = LinearForm::from_poly(col[j]);
      for (int x = 0; x < 10; ++x) out[static_cast<std::size_t>(10 * j + x)] = l.coeffs[static_cast<std::size_t>(x)];
    }
    return out;
  };
  std::vector<Vec> syz, rows;
  for (const auto& g : Z.generators()) syz.push_back(flat(g.entries));
  for (int i = 0; i < 5; ++i) {
    std::vector<Polynomial> r;
    for (int j = 0; j < 5; ++j) r.push_back(m(i, j));
    rows.push_back(flat(r));
  }
  std::vector<Vec> both = syz;
  both.insert(both.end(), rows.begin(), rows.end());
  const Zp& F = R->field();
  CHECK(rank_of(syz, 50, F) == 5);
  CHECK(rank_of(rows, 50, F) == 5);
  CHECK(rank_of(both, 50, F) == 5);
}

TEST_CASE("elimination output lies in the subring and in the ideal") {
  std::mt19937_64 rng(201);
  for (int k = 0; k < 1000; ++k) {
    const RingPtr R = make_ring(4, "x");
    const GradedIdeal I = amdtest::random_ideal(R, rng);
    const int v = static_cast<int>(rng() % 4);
    const GradedIdeal E = eliminate(I, {v});
    REQUIRE(E.nvars() == 3);
    for (const auto& g : E.generators()) {
      const Polynomial h = lift(g, R);
      REQUIRE(!uses_variable(h, v));
      REQUIRE(I.contains(h));
    }
  }
}

TEST_CASE("syzygies map to zero") {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 1000; ++k) {
    const RingPtr R = make_ring(3 + static_cast<int>(k % 2), "x");
    const GradedIdeal I = amdtest::random_ideal(R, rng);
    const GradedSubmodule Z = syzygies(I.generators());
    for (const auto& z : Z.generators()) {
      Polynomial s(R);
      for (std::size_t i = 0; i < z.entries.size(); ++i) s = s + z.entries[i] * I.generators()[i];
      REQUIRE(s.is_zero());
    }
  }
}
