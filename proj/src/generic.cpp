#include "amd/generic.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "amd/grading.hpp"
#include "amd/hilbert.hpp"
#include "amd/linalg.hpp"

namespace amd {

Matrix random_invertible(int n, const Zp& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, f.p - 1);
  for (;;) {
    Matrix m(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& c : row) c = coord(rng);
    if (determinant(m, f) != 0) return m;
  }
}

bool is_strongly_stable(const std::vector<Monomial>& gens, int nvars) {
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  for (const auto& u : gens)
    for (int j = 1; j < nvars; ++j) {
      if (!u.e[j]) continue;
      for (int i = 0; i < j; ++i) {
        Monomial w = u / Monomial::var(j) * Monomial::var(i);
        if (!in_ideal(w)) return false;
      }
    }
  return true;
}

namespace {

struct DegreePiece {
  std::vector<Monomial> monos;  // descending
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

DegreePiece degree_piece(MonomialTable& table, int e, const Ring& ring) {
  DegreePiece d;
  for (const auto& [md, monos] : table.of_degree(e)) d.monos.insert(d.monos.end(), monos.begin(), monos.end());
  std::sort(d.monos.begin(), d.monos.end(), [&](const Monomial& a, const Monomial& b) { return ring.cmp(a, b) > 0; });
  for (std::size_t k = 0; k < d.monos.size(); ++k) d.index.emplace(d.monos[k], k);
  return d;
}

// Leading monomials of I in the given coordinates, degree by degree, until their Hilbert numerator
// reaches `target`.  Returns the minimal generators of the initial ideal.
std::vector<Monomial> initial_ideal(const std::vector<Polynomial>& gens, const RingPtr& R, const IntPoly& target) {
  const int n = R->nvars();
  const Zp& f = R->field();
  int lo = 1 << 20, hi = 0;
  for (const auto& g : gens) {
    lo = std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  MonomialTable table(standard_grading(n), n);
  std::vector<Monomial> leads;
  std::vector<Vec> basis;  // basis of I_{e-1} over the previous piece
  DegreePiece prev;
  constexpr std::size_t kMaxColumns = 200000;
  for (int e = lo;; ++e) {
    DegreePiece cur = degree_piece(table, e, *R);
    if (cur.monos.size() > kMaxColumns) throw Error("generic_initial: degree too large for dense linear algebra");
    Echelon E(cur.monos.size(), f);
    for (const auto& row : basis)
      for (int v = 0; v < n; ++v) {
        Vec w(cur.monos.size(), 0);
        const Monomial xv = Monomial::var(v);
        for (std::size_t k = 0; k < row.size(); ++k)
          if (row[k]) w[cur.index.at(prev.monos[k] * xv)] = row[k];
        E.insert(std::move(w));
      }
    for (const auto& g : gens) {
      if (g.degree() != e) continue;
      Vec w(cur.monos.size(), 0);
      for (const auto& t : g.terms()) w[cur.index.at(t.m)] = t.c;
      E.insert(std::move(w));
    }
    for (std::size_t p : E.pivots()) {
      const Monomial& m = cur.monos[p];
      if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& g) { return g.divides(m); })) leads.push_back(m);
    }
    if (e >= hi) {
      IntPoly num = hilbert_numerator(leads, n);
      poly_trim(num);
      if (num == target) return leads;
    }
    basis = E.rows();
    prev = std::move(cur);
  }
}

}  // namespace

GenericInitial generic_initial(const GradedIdeal& I, std::uint64_t seed, int max_attempts) {
  const RingPtr R = with_order(I.ring(), TermOrder::degrevlex());
  const int n = R->nvars();
  GenericInitial out;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.in_ring(R));
  if (gens.empty()) {
    out.depth = n;
    out.reg = 0;
    return out;
  }
  for (const auto& g : gens)
    if (g.degree() == 0) throw Error("generic_initial: unit ideal");
  IntPoly target = hilbert_series(GradedIdeal(R, gens)).numerator;
  poly_trim(target);
  std::mt19937_64 seeds(seed);
  for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
    const Matrix M = random_invertible(n, R->field(), seeds());
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(apply_linear_change(g, M));
    std::vector<Monomial> gin = initial_ideal(moved, R, target);
    if (!is_strongly_stable(gin, n)) continue;
    int last = -1, reg = 0;
    for (const auto& m : gin) {
      reg = std::max<int>(reg, m.deg);
      for (int v = 0; v < n; ++v)
        if (m.e[v]) last = std::max(last, v);
    }
    std::sort(gin.begin(), gin.end(), [&](const Monomial& a, const Monomial& b) { return R->cmp(a, b) > 0; });
    out.generators = std::move(gin);
    out.depth = n - 1 - last;
    out.reg = reg;
    return out;
  }
  throw Error("generic_initial: no strongly stable initial ideal after the allowed retries");
}

}  // namespace amd
