#include "amd/hilbert.hpp"

#include <algorithm>

namespace amd {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<long long>(r);
}

long long poly_binom(long long x, long long b) {
  if (b < 0) return 0;
  if (x >= 0) return binom(x, b);
  // C(x, b) = (-1)^b C(b - x - 1, b) for negative x
  long long v = binom(b - x - 1, b);
  return (b % 2) ? -v : v;
}

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

IntPoly one_minus_lambda_pow(int k) {
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, IntPoly{1, -1});
  return r;
}

namespace {

void minimize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g = std::move(out);
}

IntPoly numerator_rec(std::vector<Monomial> g) {
  if (g.empty()) return {1};
  // pairwise coprime generators: product formula
  bool coprime_all = true;
  for (std::size_t i = 0; i < g.size() && coprime_all; ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!coprime(g[i], g[j])) {
        coprime_all = false;
        break;
      }
  if (coprime_all) {
    IntPoly r{1};
    for (const auto& m : g) {
      IntPoly f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = poly_mul(r, f);
    }
    return r;
  }
  // pivot on the variable occurring in most generators, with the median positive exponent
  int best = -1, cnt = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    int c = 0;
    for (const auto& m : g)
      if (m.e[v]) ++c;
    if (c > cnt) {
      cnt = c;
      best = v;
    }
  }
  std::vector<int> exps;
  for (const auto& m : g)
    if (m.e[best]) exps.push_back(m.e[best]);
  std::sort(exps.begin(), exps.end());
  int a = exps[(exps.size() - 1) / 2];
  Monomial piv = Monomial::var(best, a);
  std::vector<Monomial> plus = g;
  plus.push_back(piv);
  minimize(plus);
  std::vector<Monomial> colon;
  for (const auto& m : g) colon.push_back(m / gcd(m, piv));
  minimize(colon);
  IntPoly r = numerator_rec(std::move(plus));
  IntPoly c = numerator_rec(std::move(colon));
  IntPoly shifted(a, 0);
  shifted.insert(shifted.end(), c.begin(), c.end());
  return poly_add(r, shifted);
}

}  // namespace

IntPoly hilbert_numerator(std::vector<Monomial> gens, int) {
  minimize(gens);
  IntPoly r = numerator_rec(std::move(gens));
  poly_trim(r);
  return r;
}

HilbertData hilbert_from_numerator(IntPoly num, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  poly_trim(num);
  h.numerator = num;
  if (num.empty()) {  // zero module
    h.dim = 0;
    h.degree = 0;
    return h;
  }
  IntPoly red = num;
  int dim = nvars;
  for (;;) {
    long long at1 = 0;
    for (long long c : red) at1 += c;
    if (at1 != 0 || dim == 0) break;
    // divide by (1 - lambda)
    IntPoly q(red.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < red.size(); ++i) {
      carry += red[i];
      q[i] = carry;
    }
    red = q;
    poly_trim(red);
    --dim;
  }
  h.reduced = red;
  h.dim = dim;
  long long deg = 0;
  for (long long c : red) deg += c;
  h.degree = deg;
  // chi_k = sum_s (-1)^s C(k, s) P(-s)
  h.chi.assign(std::max(dim, 0), 0);
  for (int k = 0; k < dim; ++k) {
    __int128 acc = 0;
    for (int s = 0; s <= k; ++s) {
      __int128 v = static_cast<__int128>(binom(k, s)) * h.hilbert_polynomial(-s);
      acc += (s % 2) ? -v : v;
    }
    h.chi[k] = static_cast<long long>(acc);
  }
  return h;
}

long long HilbertData::hilbert_function(long long m) const {
  __int128 acc = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k)
    if (m - static_cast<long long>(k) >= 0)
      acc += static_cast<__int128>(numerator[k]) * binom(m - static_cast<long long>(k) + nvars - 1, nvars - 1);
  if (nvars == 0) {
    acc = (m >= 0 && static_cast<std::size_t>(m) < numerator.size()) ? numerator[m] : 0;
  }
  return static_cast<long long>(acc);
}

long long HilbertData::hilbert_polynomial(long long m) const {
  if (dim == 0) return 0;
  __int128 acc = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k)
    acc += static_cast<__int128>(reduced[k]) * poly_binom(m - static_cast<long long>(k) + dim - 1, dim - 1);
  return static_cast<long long>(acc);
}

HilbertData hilbert_series(const GradedIdeal& I) {
  std::vector<Monomial> leads;
  for (const auto& g : I.gb().elements) leads.push_back(g.lead().m);
  return hilbert_from_numerator(hilbert_numerator(leads, I.nvars()), I.nvars());
}

HilbertData hilbert_series(const GradedSubmodule& M) {
  const FreeModule& F = M.ambient();
  std::vector<std::vector<Monomial>> per(F.rank());
  for (const auto& v : M.gb()) per[v.front().comp].push_back(v.front().m);
  IntPoly num;
  int base = 0;
  for (int t : F.twists) base = std::min(base, t);
  if (base < 0) throw Error("hilbert_series: negative twists are not supported");
  for (int c = 0; c < F.rank(); ++c) {
    IntPoly part = hilbert_numerator(per[c], F.ring->nvars());
    IntPoly sh(F.twists[c], 0);
    sh.insert(sh.end(), part.begin(), part.end());
    num = poly_add(num, sh);
  }
  return hilbert_from_numerator(num, F.ring->nvars());
}

DimensionDegree dimension_degree(const HilbertData& h) {
  if (h.numerator.empty()) throw Error("dimension_degree: zero module");
  return {h.dim - 1, h.nvars - h.dim, h.degree};
}

}  // namespace amd
