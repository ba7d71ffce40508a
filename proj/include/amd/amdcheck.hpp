#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amd/hilbert.hpp"
#include "amd/resolve.hpp"

namespace amd {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AnalysisOptions {
  bool resolve = true;             // minimal resolution; otherwise depth and reg come from the generic initial ideal
  bool deficiency = true;          // deficiency modules K^0 .. K^{d+1} (needs resolve)
  DegreeWindow window{};           // degree window for the deficiency modules
  bool scroll_projection = false;  // the variety is known to be a projection of a (cone over a) scroll
  bool non_normal = false;         // the variety is known to be non-normal
  std::uint64_t seed = 1;
  bool progress = false;
};

struct AnalysisReport {
  int nvars = 0;
  int r = 0;       // ambient projective dimension
  int d = 0;       // dim X
  int codim = 0;
  long long degree = 0;
  int t = 0;       // arithmetic depth
  int reg = 0;     // reg A
  bool is_AMD = false;
  bool is_minimal_degree = false;
  bool is_ACM = false;
  bool is_Gorenstein = false;
  std::optional<long long> delta_genus;
  long long sectional_genus = 0;
  long long quadric_count = 0;
  std::optional<int> secant_cone_dim;

  HilbertData hilbert;
  std::optional<BettiTable> betti;
  std::optional<FreeComplex> resolution;         // minimal
  std::map<int, GradedModuleData> deficiency;    // i -> K^i(A)
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_json() const;
  std::string to_text() const;
};

AnalysisReport analyze(const GradedIdeal& I, const AnalysisOptions& opts = {});

// Numerator of the Hilbert series against the closed form for (r, d, t).
CheckResult check_hilbert_formula(const AnalysisReport& report, const HilbertData& series);
// dim_k I_2 = t + C(r+1-d, 2) - d - 2.
CheckResult check_quadric_count(const AnalysisReport& report);
// Bounds and exact windows for u_i = beta_{i,i+1} and v_i = beta_{i,i+2} of a scroll projection with t <= d.
std::vector<CheckResult> check_betti_bounds(const AnalysisReport& report, const BettiTable& betti);
// Vanishing of K^i off {t, d+1}, beg K(A) = d, and K^t as a polynomial ring in t-1 variables shifted by 2-t.
std::vector<CheckResult> check_deficiency_shapes(const AnalysisReport& report,
                                                 const std::map<int, GradedModuleData>& deficiency);
// Final Betti number 1 and K(A) = A(1-d) on the window of `canonical`.
CheckResult check_gorenstein(const AnalysisReport& report, const BettiTable& betti, const GradedModuleData& canonical);

struct GenusInvariants {
  long long delta_genus = 0;
  long long sectional_genus = 0;
};
// Needs K^1(A) in degree -1 unless t >= 2.
GenusInvariants genus_invariants(const AnalysisReport& report);

struct HyperplaneSection {
  GradedIdeal ideal;   // in one fewer variable
  LinearForm form;
  int depth_before = -1;
  int depth_after = -1;
  int attempts = 0;
  int depth_delta() const { return depth_before - depth_after; }
};
// A' = (A / l A) / H^0.  With no form given a seeded random one is drawn, retrying (at most 8 times)
// when dimension or degree do not behave like a generic section.
HyperplaneSection hyperplane_section(const GradedIdeal& I, std::optional<LinearForm> form, std::uint64_t seed);

// Closed-form reference values.
// b_i = (r+1-d) C(r-d, i) - C(r-d, i+1): Betti numbers of the projecting ring B over S.
long long projecting_ring_betti(int r, int d, int i);
// c_i = i C(r-d, i+1): Eagon-Northcott numbers of the containing scroll.
long long containing_scroll_betti(int r, int d, int i);
IntPoly almost_minimal_numerator(int r, int d, int t);  // numerator over (1 - lambda)^(r+1)

}  // namespace amd
