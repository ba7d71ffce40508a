#include "amd/grading.hpp"

#include <numeric>

namespace amd {

MDeg Grading::of(const Monomial& m) const {
  MDeg d;
  for (std::size_t i = 0; i < var_weights.size(); ++i) {
    if (!m.e[i]) continue;
    for (int r = 0; r < rank; ++r) d.v[r] += var_weights[i].v[r] * m.e[i];
  }
  return d;
}

Grading standard_grading(int nvars) {
  Grading g;
  g.rank = 1;
  g.var_weights.assign(nvars, MDeg{});
  for (auto& w : g.var_weights) w.v[0] = 1;
  return g;
}

namespace {

long long gcdll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Integer basis of {x : A x = 0}.
std::vector<std::vector<long long>> integer_nullspace(std::vector<std::vector<long long>> A, int ncols) {
  std::vector<int> pivcol;
  std::size_t row = 0;
  for (int c = 0; c < ncols && row < A.size(); ++c) {
    std::size_t p = row;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c] == 0) continue;
      long long a = A[row][c], b = A[i][c];
      long long g = 0;
      for (int k = 0; k < ncols; ++k) {
        A[i][k] = A[i][k] * a - A[row][k] * b;
        g = gcdll(g, A[i][k]);
      }
      if (g > 1)
        for (int k = 0; k < ncols; ++k) A[i][k] /= g;
    }
    long long g = 0;
    for (int k = 0; k < ncols; ++k) g = gcdll(g, A[row][k]);
    if (g > 1)
      for (int k = 0; k < ncols; ++k) A[row][k] /= g;
    pivcol.push_back(c);
    ++row;
  }
  std::vector<char> is_piv(ncols, 0);
  for (int c : pivcol) is_piv[c] = 1;
  std::vector<std::vector<long long>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    long long L = 1;
    for (std::size_t r = 0; r < pivcol.size(); ++r) {
      long long pv = A[r][pivcol[r]];
      if (A[r][f] != 0) L = std::lcm(L, pv < 0 ? -pv : pv);
    }
    std::vector<long long> x(ncols, 0);
    x[f] = L;
    for (std::size_t r = 0; r < pivcol.size(); ++r) {
      if (A[r][f] == 0) continue;
      x[pivcol[r]] = -A[r][f] * (L / A[r][pivcol[r]]);
    }
    long long g = 0;
    for (long long v : x) g = gcdll(g, v);
    if (g > 1)
      for (auto& v : x) v /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::pair<Grading, std::vector<MDeg>> detect_grading(const std::vector<SVec>& gens, int nvars,
                                                     const std::vector<int>& twists) {
  const int r = static_cast<int>(twists.size());
  const int ncols = nvars + r;
  std::vector<std::vector<long long>> A;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    const ModTerm& t0 = g.front();
    for (std::size_t a = 1; a < g.size(); ++a) {
      std::vector<long long> row(ncols, 0);
      for (int i = 0; i < nvars; ++i) row[i] = static_cast<long long>(g[a].m.e[i]) - t0.m.e[i];
      row[nvars + g[a].comp] += 1;
      row[nvars + t0.comp] -= 1;
      bool zero = true;
      for (auto v : row) zero = zero && v == 0;
      if (!zero) A.push_back(std::move(row));
    }
  }
  auto basis = integer_nullspace(A, ncols);
  Grading G;
  G.var_weights.assign(nvars, MDeg{});
  std::vector<MDeg> cols(r);
  for (int i = 0; i < nvars; ++i) G.var_weights[i].v[0] = 1;
  for (int c = 0; c < r; ++c) cols[c].v[0] = twists[c];
  int rank = 1;
  for (const auto& b : basis) {
    if (rank >= kMaxGrade) break;
    // skip vectors proportional to the standard grading
    bool standard = true;
    for (int i = 0; i < ncols && standard; ++i) {
      long long expect = i < nvars ? b[0] : b[0] * twists[i - nvars];
      if (b[i] != expect) standard = false;
    }
    if (standard) continue;
    for (int i = 0; i < nvars; ++i) G.var_weights[i].v[rank] = static_cast<int>(b[i]);
    for (int c = 0; c < r; ++c) cols[c].v[rank] = static_cast<int>(b[nvars + c]);
    ++rank;
  }
  G.rank = rank;
  return {G, cols};
}

const std::map<MDeg, std::vector<Monomial>>& MonomialTable::of_degree(int e) {
  auto it = by_degree_.find(e);
  if (it != by_degree_.end()) return it->second;
  auto& bucket = by_degree_[e];
  if (e < 0) return bucket;
  std::vector<int> ex(n_, 0);
  auto emit = [&]() {
    Monomial m = Monomial::from_exponents(ex);
    bucket[grading_.of(m)].push_back(m);
  };
  if (n_ == 0) {
    if (e == 0) bucket[MDeg{}].push_back(Monomial{});
    return bucket;
  }
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n_ - 1) {
      ex[var] = left;
      emit();
      ex[var] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      ex[var] = a;
      self(self, var + 1, left - a);
    }
    ex[var] = 0;
  };
  rec(rec, 0, e);
  return bucket;
}

const std::vector<Monomial>& MonomialTable::get(const MDeg& d) {
  const auto& b = of_degree(d.total());
  auto it = b.find(d);
  return it == b.end() ? empty_ : it->second;
}

}  // namespace amd
