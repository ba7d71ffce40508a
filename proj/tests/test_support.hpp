#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "amd/groebner.hpp"
#include "amd/hilbert.hpp"

namespace amdtest {

using amd::Monomial;
using amd::Polynomial;
using amd::RingPtr;
using amd::Term;

inline Monomial random_monomial(int nvars, int degree, std::mt19937_64& rng) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::uniform_int_distribution<int> pick(0, nvars - 1);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(pick(rng))];
  return Monomial::from_exponents(e);
}

// Homogeneous polynomial with up to `terms` terms; may be zero only if terms == 0.
inline Polynomial random_homogeneous(const RingPtr& R, int degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coef(1, R->prime() - 1);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({random_monomial(R->nvars(), degree, rng), coef(rng)});
  Polynomial f(R, ts);
  if (f.is_zero() && terms > 0) return Polynomial::monomial(R, random_monomial(R->nvars(), degree, rng));
  return f;
}

// Small random proper homogeneous ideal: 2..4 generators of degree 2..3 with 1..3 terms.
inline amd::GradedIdeal random_ideal(const RingPtr& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ngens(2, 4), deg(2, 3), nterms(1, 3);
  std::vector<Polynomial> gens;
  const int g = ngens(rng);
  for (int k = 0; k < g; ++k) gens.push_back(random_homogeneous(R, deg(rng), nterms(rng), rng));
  return amd::GradedIdeal(R, gens);
}

inline Polynomial random_poly(const RingPtr& R, int max_degree, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::uint32_t> coef(1, R->prime() - 1);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({random_monomial(R->nvars(), deg(rng), rng), coef(rng)});
  return Polynomial(R, ts);
}

// Independent closed form: numerator over (1-l)^(r+1) of (1 + (r+1-d) l)/(1-l)^(d+1) - l/(1-l)^(t-1).
inline std::vector<long long> expected_amd_numerator(int r, int d, int t) {
  auto binom = [](long long n, long long k) -> long long {
    if (k < 0 || n < 0 || k > n) return 0;
    long long b = 1;
    for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
  };
  auto pow_one_minus = [&](int e) {
    std::vector<long long> p(static_cast<std::size_t>(e) + 1);
    for (int i = 0; i <= e; ++i) p[static_cast<std::size_t>(i)] = ((i % 2) ? -1 : 1) * binom(e, i);
    return p;
  };
  std::vector<long long> out(static_cast<std::size_t>(r + 4), 0);
  auto a = pow_one_minus(r - d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + 1] += (r + 1 - d) * a[i];
  }
  auto b = pow_one_minus(r + 2 - t);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] -= b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline long long choose(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long b = 1;
  for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace amdtest
