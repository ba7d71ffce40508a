#include "amd/resolve.hpp"

#include "column_ops.hpp"

namespace amd {

namespace {

// Position of a unit entry in d_i as (column, term index), searching columns in order.
bool find_unit(const std::vector<SVec>& d, std::size_t& col, std::size_t& term) {
  for (col = 0; col < d.size(); ++col)
    for (term = 0; term < d[col].size(); ++term)
      if (d[col][term].m.is_one()) return true;
  return false;
}

void drop_basis_element(GradedFreeModule& F, std::size_t k) {
  F.degrees.erase(F.degrees.begin() + static_cast<std::ptrdiff_t>(k));
  F.mdegs.erase(F.mdegs.begin() + static_cast<std::ptrdiff_t>(k));
}

// Remove row r from every column (entries there must already be zero or irrelevant) and renumber.
void drop_row(std::vector<SVec>& d, std::uint32_t r) {
  for (auto& col : d) {
    SVec out;
    out.reserve(col.size());
    for (auto t : col) {
      if (t.comp == r) continue;
      if (t.comp > r) --t.comp;
      out.push_back(t);
    }
    col = std::move(out);
  }
}

}  // namespace

MinimalResolution minimalize(const FreeComplex& input) {
  FreeComplex c = input;
  const Zp& f = c.ring->field();
  for (int i = 1; i <= c.length(); ++i) {
    auto& d = c.maps[i - 1];
    std::size_t k, ti;
    while (find_unit(d, k, ti)) {
      const std::uint32_t r = d[k][ti].comp;
      const std::uint32_t u_inv = f.inv(d[k][ti].c);
      const SVec pivot = d[k];
      // clear row r in all other columns
      for (std::size_t k2 = 0; k2 < d.size(); ++k2) {
        if (k2 == k) continue;
        bool touches = false;
        for (const auto& t : d[k2])
          if (t.comp == r) {
            touches = true;
            break;
          }
        if (!touches) continue;
        detail::ColumnAccumulator acc(f);
        acc.add(d[k2], 1, Monomial{});
        for (const auto& t : d[k2])
          if (t.comp == r) acc.add(pivot, f.neg(f.mul(t.c, u_inv)), t.m);
        d[k2] = acc.result(*c.ring);
      }
      // delete column k of d_i (basis element k of F_i) and row r (basis element r of F_{i-1})
      d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
      drop_row(d, r);
      drop_basis_element(c.modules[i], k);
      drop_basis_element(c.modules[i - 1], r);
      if (i < c.length()) drop_row(c.maps[i], static_cast<std::uint32_t>(k));
      if (i >= 2) {
        auto& lower = c.maps[i - 2];
        lower.erase(lower.begin() + r);
      }
    }
  }
  // trim trailing zero modules
  while (c.length() > 0 && c.modules.back().rank() == 0) {
    c.modules.pop_back();
    c.maps.pop_back();
  }
  MinimalResolution out;
  out.betti = betti_table(c);
  out.complex = std::move(c);
  return out;
}

}  // namespace amd
