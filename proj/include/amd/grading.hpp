#pragma once

#include <array>
#include <map>
#include <unordered_map>
#include <vector>

#include "amd/groebner.hpp"

namespace amd {

constexpr int kMaxGrade = 12;

// Multidegree; entry 0 is always the total degree.
struct MDeg {
  std::array<int, kMaxGrade> v{};
  bool operator==(const MDeg& o) const { return v == o.v; }
  bool operator<(const MDeg& o) const { return v < o.v; }
  MDeg operator+(const MDeg& o) const {
    MDeg r;
    for (int i = 0; i < kMaxGrade; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  MDeg operator-(const MDeg& o) const {
    MDeg r;
    for (int i = 0; i < kMaxGrade; ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
  int total() const { return v[0]; }
};

struct MDegHash {
  std::size_t operator()(const MDeg& d) const {
    std::size_t h = 0;
    for (int x : d.v) h = h * 1000003u + static_cast<std::size_t>(x + 7919);
    return h;
  }
};

// A Z^k grading: variable weights (rows) and a multidegree for each basis column of F_0.
struct Grading {
  int rank = 1;                              // number of rows used
  std::vector<MDeg> var_weights;             // per variable
  MDeg of(const Monomial& m) const;
};

// Finest grading (up to kMaxGrade rows) making every vector in `gens` homogeneous; row 0 is the
// standard grading with the given column twists.  Returns the grading and the multidegree of each
// basis column.
std::pair<Grading, std::vector<MDeg>> detect_grading(const std::vector<SVec>& gens, int nvars,
                                                     const std::vector<int>& twists);
Grading standard_grading(int nvars);

// Monomials of each total degree bucketed by multidegree.
class MonomialTable {
 public:
  MonomialTable(const Grading& g, int nvars) : grading_(g), n_(nvars) {}
  const std::vector<Monomial>& get(const MDeg& d);  // monomials of multidegree d
  const std::map<MDeg, std::vector<Monomial>>& of_degree(int e);

 private:
  Grading grading_;
  int n_;
  std::unordered_map<int, std::map<MDeg, std::vector<Monomial>>> by_degree_;
  std::vector<Monomial> empty_;
};

}  // namespace amd
