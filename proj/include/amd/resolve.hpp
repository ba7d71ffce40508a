#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "amd/grading.hpp"
#include "amd/groebner.hpp"
#include "amd/hilbert.hpp"

namespace amd {

struct GradedFreeModule {
  std::vector<int> degrees;  // total degree of each basis element
  std::vector<MDeg> mdegs;   // multidegree of each basis element
  int rank() const { return static_cast<int>(degrees.size()); }
};

// Chain of free modules F_0 <- F_1 <- ... <- F_len.  maps[i] is d_{i+1}: its k-th column is the
// image of the k-th basis element of F_{i+1}, written over the basis of F_i (comp = row index).
// Column terms are sorted by row, then descending monomial.
struct FreeComplex {
  RingPtr ring;
  Grading grading;
  std::vector<GradedFreeModule> modules;
  std::vector<std::vector<SVec>> maps;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  const std::vector<SVec>& d(int i) const { return maps.at(static_cast<std::size_t>(i - 1)); }
  std::vector<int> ranks() const;
};

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  long long at(int i, int j) const;
  void add(int i, int j, long long b);
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  int pd() const;
  int reg() const;
  int depth() const { return nvars_ - pd(); }
  long long total(int i) const;
  // beta_{i, i+shift} for i = 1..last
  std::vector<long long> row(int shift, int last) const;
  // sum_i (-1)^i sum_j beta_{i,j} lambda^j
  IntPoly euler_numerator() const;

  std::string to_json() const;
  // Two-row u/v layout when reg = 2 and beta_0 = 1 in degree 0, full grid otherwise.
  std::string to_text() const;
  bool operator==(const BettiTable& o) const { return nvars_ == o.nvars_ && entries_ == o.entries_; }

 private:
  int nvars_ = 0;
  std::map<std::pair<int, int>, long long> entries_;
};

struct ResolutionOptions {
  bool progress = false;  // per-degree progress on stderr
  int max_level = -1;     // stop after this level (all levels when negative)
};

// Resolution of S/I using the given generators of I as d_1; higher levels are minimal.
FreeComplex free_resolution(const GradedIdeal& I, const ResolutionOptions& opts = {});
// Resolution of F/M using the given generators of M as d_1.
FreeComplex free_resolution(const GradedSubmodule& M, const ResolutionOptions& opts = {});
FreeComplex free_resolution(const RingPtr& ring, const std::vector<int>& twists, std::vector<SVec> gens,
                            const ResolutionOptions& opts = {});

// Degrees of a Schreyer frame: frame[i][j] counts frame generators of level i in degree j.
std::vector<std::map<int, long long>> schreyer_frame_counts(const RingPtr& ring, const std::vector<int>& twists,
                                                            const std::vector<SVec>& gens);

struct MinimalResolution {
  FreeComplex complex;
  BettiTable betti;
};
MinimalResolution minimalize(const FreeComplex& c);
BettiTable betti_table(const FreeComplex& c);

int depth_from_betti(const BettiTable& b, int nvars);
int regularity(const BettiTable& b);

// d_{i} d_{i+1} = 0 for all i
bool is_complex(const FreeComplex& c);
bool has_unit_entries(const FreeComplex& c);
// Homology dimensions of the complex (positions >= 1) in total degree j.
std::vector<long long> homology_dims(const FreeComplex& c, int j);
std::string to_json(const BettiTable& b);

// ---------------------------------------------------------------- deficiency modules

struct DegreeWindow {
  int lo = -6;
  int hi = 4;
};

// A graded module given as the homology ker(out) / im(in) at one spot of a complex of free modules.
struct Subquotient {
  GradedFreeModule source;  // in: source -> middle
  GradedFreeModule middle;
  GradedFreeModule target;  // out: middle -> target
  std::vector<SVec> in;     // columns over middle
  std::vector<SVec> out;    // columns over target
};

struct GradedModuleData {
  RingPtr ring;
  DegreeWindow window;
  std::map<int, long long> hilbert;       // degree -> dimension, for every degree in the window
  std::vector<LinearForm> annihilator;    // basis of linear forms killing the module on the window
  Subquotient presentation;

  long long hf(int m) const;
  bool zero_on_window() const;
};

// K^i(M) = Ext^{n-i}(M, S(-n)) for n = #variables, from a resolution of M.
GradedModuleData ext_deficiency(const FreeComplex& res, int i, DegreeWindow window = {});

// Presentation of S[y]/J as an S-module on the generators {1, y}.  `y` is the index of the
// extra variable in J's ring.  Throws when {1, y} does not generate.
struct RestrictedScalars {
  RingPtr base;                 // S: J's ring without y
  GradedSubmodule relations;    // in S^2 with twists (0, 1)
  Polynomial y_squared_0;       // y^2 = y_squared_0 + y_squared_1 * y in S[y]/J
  Polynomial y_squared_1;
};
RestrictedScalars restrict_scalars_presentation(const GradedIdeal& J, int y);

}  // namespace amd
