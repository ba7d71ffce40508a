#pragma once

#include <algorithm>
#include <functional>
#include <string>

#include "amd/resolve.hpp"
#include "test_support.hpp"

namespace amdtest {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool ok() const { return cases > 0 && failures == 0; }
};

inline SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed,
                             const std::function<std::string(std::mt19937_64&)>& one_case) {
  SuiteResult res;
  res.name = name;
  Stopwatch sw;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k) {
    std::string err;
    try {
      err = one_case(rng);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    ++res.cases;
    if (!err.empty()) {
      if (res.failures++ == 0) res.first_failure = "case " + std::to_string(k) + ": " + err;
    }
  }
  res.seconds = sw.seconds();
  return res;
}

inline RingPtr small_ring(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(3, 4);
  return amd::make_ring(n(rng), "x", 32003);
}

// Normal forms do not depend on the order in which reducers are applied.
inline SuiteResult suite_gb_confluence(int cases = 1000, std::uint64_t seed = 11) {
  return run_suite("gb_confluence", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const RingPtr R = small_ring(rng);
    const amd::GradedIdeal I = random_ideal(R, rng);
    const amd::GroebnerBasis& gb = I.gb();
    const Polynomial f = random_poly(R, 4, 6, rng);
    const Polynomial nf = amd::normal_form(f, gb);
    for (std::uint64_t s = 0; s < 3; ++s)
      if (amd::normal_form_random_path(f, gb, rng()) != nf) return "reduction paths disagree for " + f.str();
    // f - NF(f) lies in I: it reduces to zero
    if (!amd::normal_form(f - nf, gb).is_zero()) return "f - NF(f) not in the ideal";
    return {};
  });
}

// Every S-pair of a returned basis reduces to zero and the generators lie in the ideal it spans.
inline SuiteResult suite_buchberger(int cases = 1000, std::uint64_t seed = 12) {
  return run_suite("buchberger_criterion", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const RingPtr R = small_ring(rng);
    const amd::GradedIdeal I = random_ideal(R, rng);
    const amd::GroebnerBasis& gb = I.gb();
    if (!amd::satisfies_buchberger_criterion(gb)) return "S-pair with nonzero remainder in " + I.str();
    for (const auto& g : I.generators())
      if (!amd::normal_form(g, gb).is_zero()) return "generator not reduced to 0";
    // reduced: monic leads, no lead divides another term
    for (const auto& g : gb.elements) {
      if (g.lead().c != 1) return "lead coefficient not 1";
      for (const auto& h : gb.elements)
        for (const auto& t : h.terms())
          if (&g != &h && g.lead().m.divides(t.m)) return "basis not reduced";
    }
    return {};
  });
}

// d^2 = 0, zero homology, and the alternating Betti sum equals the Hilbert numerator.
inline SuiteResult suite_resolution_exactness(int cases = 1000, std::uint64_t seed = 13) {
  return run_suite("resolution_exactness", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const RingPtr R = small_ring(rng);
    const amd::GradedIdeal I = random_ideal(R, rng);
    const amd::FreeComplex C = amd::free_resolution(I);
    if (!amd::is_complex(C)) return "d^2 != 0";
    int top = 0;
    for (const auto& F : C.modules)
      for (int d : F.degrees) top = std::max(top, d);
    for (int j = 0; j <= top + 1; ++j)
      for (long long h : amd::homology_dims(C, j))
        if (h != 0) return "homology in degree " + std::to_string(j);
    const amd::MinimalResolution M = amd::minimalize(C);
    if (!amd::is_complex(M.complex) || amd::has_unit_entries(M.complex)) return "minimal complex invalid";
    amd::IntPoly e = M.betti.euler_numerator(), h = amd::hilbert_series(I).numerator;
    amd::poly_trim(e);
    amd::poly_trim(h);
    if (e != h) return "Betti/Hilbert identity fails for " + I.str();
    return {};
  });
}

// Permuting generators and adding redundant ones does not change the minimal Betti table.
inline SuiteResult suite_minimalization_order(int cases = 1000, std::uint64_t seed = 14) {
  return run_suite("minimalization_order_independence", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const RingPtr R = small_ring(rng);
    const amd::GradedIdeal I = random_ideal(R, rng);
    std::vector<Polynomial> gens = I.generators();
    const Polynomial extra = gens[0] * Polynomial::variable(R, static_cast<int>(rng() % R->nvars()));
    gens.push_back(extra);
    if (gens.size() > 2 && gens[1].degree() == gens[2].degree()) gens.push_back(gens[1] + gens[2].scaled(3));
    else gens.push_back(gens[1]);
    std::shuffle(gens.begin(), gens.end(), rng);
    std::vector<Polynomial> nonzero;
    for (auto& g : gens)
      if (!g.is_zero()) nonzero.push_back(g);
    const amd::BettiTable a = amd::minimalize(amd::free_resolution(I)).betti;
    const amd::BettiTable b = amd::minimalize(amd::free_resolution(amd::GradedIdeal(R, nonzero))).betti;
    if (!(a == b)) return "Betti tables differ for " + I.str();
    return {};
  });
}

// (I : f^oo) is idempotent.
inline SuiteResult suite_saturation(int cases = 1000, std::uint64_t seed = 15) {
  return run_suite("saturation_idempotence", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const RingPtr R = small_ring(rng);
    const amd::GradedIdeal I = random_ideal(R, rng);
    const Polynomial f = (rng() % 2) ? Polynomial::variable(R, static_cast<int>(rng() % R->nvars()))
                                     : random_homogeneous(R, 1, 2, rng);
    const amd::GradedIdeal s1 = amd::saturate(I, f);
    const amd::GradedIdeal s2 = amd::saturate(s1, f);
    if (!amd::same_ideal(s1, s2)) return "saturation not idempotent for " + I.str();
    for (const auto& g : I.generators())
      if (!s1.contains(g)) return "I not contained in its saturation";
    return {};
  });
}

inline std::vector<SuiteResult> run_all_suites(int cases = 1000) {
  return {suite_gb_confluence(cases), suite_buchberger(cases), suite_resolution_exactness(cases),
          suite_minimalization_order(cases), suite_saturation(cases)};
}

}  // namespace amdtest
