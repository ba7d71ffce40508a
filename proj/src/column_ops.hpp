#pragma once

// Helpers shared by the resolution code: columns are SVecs sorted by row, then descending monomial.

#include <algorithm>
#include <unordered_map>

#include "amd/groebner.hpp"

namespace amd::detail {

struct RowKey {
  std::uint32_t comp;
  Monomial m;
  bool operator==(const RowKey& o) const { return comp == o.comp && m == o.m; }
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const { return k.m.hash() * 1000003u + k.comp; }
};

inline void canonicalize_column(SVec& v, const Ring& ring) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return ring.cmp(a.m, b.m) > 0;
  });
  // merge duplicates
  SVec out;
  out.reserve(v.size());
  const Zp& f = ring.field();
  for (const auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = f.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  v = std::move(out);
}

inline SVec shift_column(const SVec& v, const Monomial& m) {
  SVec r = v;
  for (auto& t : r) t.m = t.m * m;
  return r;
}

// Accumulates linear combinations of columns.
class ColumnAccumulator {
 public:
  explicit ColumnAccumulator(const Zp& f) : f_(f) {}
  void add(const SVec& v, std::uint32_t c, const Monomial& m) {
    if (c == 0) return;
    for (const auto& t : v) {
      auto& slot = acc_[RowKey{t.comp, t.m * m}];
      slot = f_.add(slot, f_.mul(c, t.c));
    }
  }
  SVec result(const Ring& ring) const {
    SVec out;
    for (const auto& [k, c] : acc_)
      if (c) out.push_back({k.m, k.comp, c});
    canonicalize_column(out, ring);
    return out;
  }

 private:
  Zp f_;
  std::unordered_map<RowKey, std::uint32_t, RowKeyHash> acc_;
};

}  // namespace amd::detail

#include "amd/linalg.hpp"

namespace amd::detail {

using ColumnSpec = std::pair<std::uint32_t, Monomial>;  // (basis element, monomial multiplier)
using RowIndex = std::unordered_map<RowKey, std::size_t, RowKeyHash>;

// Dense columns of mono * images[gen] for each spec; rows are numbered on first appearance in `rows`.
std::vector<Vec> dense_columns(const std::vector<ColumnSpec>& specs, const std::vector<SVec>& images,
                               RowIndex& rows, const Zp& f);

}  // namespace amd::detail
