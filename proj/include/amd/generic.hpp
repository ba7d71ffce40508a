#pragma once

#include <cstdint>
#include <vector>

#include "amd/groebner.hpp"

namespace amd {

// Generic initial ideal for degrevlex, computed in seeded random coordinates.  Depth and
// regularity of S/I are read off the strongly stable gin (Bayer-Stillman).
struct GenericInitial {
  std::vector<Monomial> generators;  // minimal generators of gin(I)
  int depth = -1;                    // depth of S/I
  int reg = -1;                      // reg(I); reg(S/I) = reg - 1
  int attempts = 0;
};

GenericInitial generic_initial(const GradedIdeal& I, std::uint64_t seed, int max_attempts = 8);

bool is_strongly_stable(const std::vector<Monomial>& gens, int nvars);

// Seeded random invertible n x n matrix over F_p.
Matrix random_invertible(int n, const Zp& f, std::uint64_t seed);

}  // namespace amd
