#pragma once

#include <vector>

#include "amd/groebner.hpp"

namespace amd {

using IntPoly = std::vector<long long>;  // coefficients in increasing powers of lambda

// C(n, k) for integers; zero unless 0 <= k <= n.
long long binom(long long n, long long k);
// Polynomial binomial C(x, b) = x(x-1)...(x-b+1)/b! evaluated at any integer x; zero for b < 0.
long long poly_binom(long long x, long long b);

// Numerator N with H_{S/J}(lambda) = N(lambda) / (1-lambda)^nvars for a monomial ideal J.
IntPoly hilbert_numerator(std::vector<Monomial> gens, int nvars);

struct HilbertData {
  int nvars = 0;
  IntPoly numerator;          // over (1-lambda)^nvars
  IntPoly reduced;            // over (1-lambda)^dim
  int dim = 0;                // Krull dimension of the graded module
  long long degree = 0;       // multiplicity
  std::vector<long long> chi; // Hilbert polynomial in the basis C(n+i-1, i), i = 0..dim-1

  long long hilbert_function(long long m) const;
  long long hilbert_polynomial(long long m) const;
  int projective_dim() const { return dim - 1; }
};

HilbertData hilbert_from_numerator(IntPoly numerator, int nvars);
HilbertData hilbert_series(const GradedIdeal& I);
// Hilbert series of the cokernel F / M.
HilbertData hilbert_series(const GradedSubmodule& M);

struct DimensionDegree {
  int dim;    // projective dimension of X
  int codim;  // in P^{nvars-1}
  long long degree;
};
DimensionDegree dimension_degree(const HilbertData& h);

// Exact polynomial helpers
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly one_minus_lambda_pow(int k);
void poly_trim(IntPoly& a);

}  // namespace amd
