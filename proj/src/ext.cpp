#include <memory>
#include <set>

#include "amd/resolve.hpp"
#include "column_ops.hpp"

namespace amd {

long long GradedModuleData::hf(int m) const {
  auto it = hilbert.find(m);
  return it == hilbert.end() ? 0 : it->second;
}

bool GradedModuleData::zero_on_window() const {
  for (const auto& [m, h] : hilbert)
    if (h != 0) return false;
  return true;
}

namespace {

using detail::ColumnSpec;
using detail::RowIndex;
using detail::RowKey;

std::vector<SVec> transpose(const std::vector<SVec>& d, std::size_t nrows, const Ring& ring) {
  std::vector<SVec> t(nrows);
  for (std::size_t l = 0; l < d.size(); ++l)
    for (const auto& term : d[l]) t[term.comp].push_back({term.m, static_cast<std::uint32_t>(l), term.c});
  for (auto& col : t) detail::canonicalize_column(col, ring);
  return t;
}

// One multidegree piece of the homology ker(out) / im(in).
struct Block {
  std::vector<ColumnSpec> middle;
  RowIndex index;          // (generator, monomial) -> position in `middle`
  std::vector<Vec> cycles; // representatives of a basis of the homology
  std::unique_ptr<Echelon> boundaries;
  long long dim = 0;
};

class ExtBuilder {
 public:
  ExtBuilder(const FreeComplex& res, int k)
      : res_(res), f_(res.ring->field()), table_(res.grading, res.ring->nvars()) {
    const int n = res.ring->nvars();
    MDeg nu;
    for (const auto& w : res.grading.var_weights) nu = nu + w;
    auto dual = [&](int level) {
      GradedFreeModule D;
      if (level < 0 || level > res.length()) return D;
      const auto& F = res.modules[static_cast<std::size_t>(level)];
      for (int j = 0; j < F.rank(); ++j) {
        D.degrees.push_back(n - F.degrees[static_cast<std::size_t>(j)]);
        D.mdegs.push_back(nu - F.mdegs[static_cast<std::size_t>(j)]);
      }
      return D;
    };
    source_ = dual(k - 1);
    middle_ = dual(k);
    target_ = dual(k + 1);
    if (k + 1 <= res.length()) out_ = transpose(res.d(k + 1), static_cast<std::size_t>(middle_.rank()), *res.ring);
    if (k >= 1 && k <= res.length()) in_ = transpose(res.d(k), static_cast<std::size_t>(source_.rank()), *res.ring);
  }

  std::set<MDeg> multidegrees(int m) {
    std::set<MDeg> out;
    for (int j = 0; j < middle_.rank(); ++j)
      for (const auto& [md, monos] : table_.of_degree(m - middle_.degrees[static_cast<std::size_t>(j)]))
        out.insert(middle_.mdegs[static_cast<std::size_t>(j)] + md);
    return out;
  }

  Block& block(const MDeg& mu) {
    auto it = blocks_.find(mu);
    if (it != blocks_.end()) return it->second;
    Block& b = blocks_[mu];
    for (int j = 0; j < middle_.rank(); ++j)
      for (const auto& mono : table_.get(mu - middle_.mdegs[static_cast<std::size_t>(j)])) {
        b.index.emplace(RowKey{static_cast<std::uint32_t>(j), mono}, b.middle.size());
        b.middle.push_back({static_cast<std::uint32_t>(j), mono});
      }
    const std::size_t dim = b.middle.size();
    b.boundaries = std::make_unique<Echelon>(dim, f_);
    if (dim == 0) return b;

    std::vector<ColumnSpec> in_specs;
    for (int l = 0; l < source_.rank(); ++l)
      for (const auto& mono : table_.get(mu - source_.mdegs[static_cast<std::size_t>(l)]))
        in_specs.push_back({static_cast<std::uint32_t>(l), mono});
    RowIndex rows = b.index;
    if (!in_.empty())
        for (auto& col : detail::dense_columns(in_specs, in_, rows, f_)) {
        col.resize(dim);
        b.boundaries->insert(std::move(col));
      }

    RowIndex out_rows;
    std::vector<Vec> out_cols;
    if (!out_.empty()) out_cols = detail::dense_columns(b.middle, out_, out_rows, f_);
    std::vector<Vec> cycles = out_rows.empty() ? identity(dim) : kernel_of_columns(out_cols, out_rows.size(), f_);
    Echelon quotient = *b.boundaries;
    for (auto& z : cycles)
      if (quotient.insert(z)) b.cycles.push_back(z);
    b.dim = static_cast<long long>(b.cycles.size());
    return b;
  }

  // Linear forms killing every homology class of total degree m (m + 1 must be computable).
  void annihilate(int m, std::vector<Echelon>& constraints, const std::vector<std::vector<int>>& groups) {
    for (const auto& mu : multidegrees(m)) {
      Block& b = block(mu);
      if (b.cycles.empty()) continue;
      const std::vector<Vec> cycles = b.cycles;
      const std::vector<ColumnSpec> middle = b.middle;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const MDeg target = mu + res_.grading.var_weights[static_cast<std::size_t>(groups[g][0])];
        Block& up = block(target);
        for (const auto& z : cycles) {
          std::vector<Vec> images;
          for (int v : groups[g]) {
            Vec w(up.middle.size(), 0);
            const Monomial xv = Monomial::var(v);
            for (std::size_t a = 0; a < z.size(); ++a) {
              if (!z[a]) continue;
              w[up.index.at(RowKey{middle[a].first, middle[a].second * xv})] = z[a];
            }
            up.boundaries->reduce(w);
            images.push_back(std::move(w));
          }
          for (std::size_t q = 0; q < up.middle.size(); ++q) {
            Vec row(groups[g].size());
            bool nonzero = false;
            for (std::size_t v = 0; v < images.size(); ++v) {
              row[v] = images[v][q];
              nonzero |= row[v] != 0;
            }
            if (nonzero) constraints[g].insert(std::move(row));
          }
        }
      }
    }
  }

  GradedFreeModule source_, middle_, target_;
  std::vector<SVec> in_, out_;

 private:
  static std::vector<Vec> identity(std::size_t n) {
    std::vector<Vec> e(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
    return e;
  }

  const FreeComplex& res_;
  Zp f_;
  MonomialTable table_;
  std::map<MDeg, Block> blocks_;
};

}  // namespace

GradedModuleData ext_deficiency(const FreeComplex& res, int i, DegreeWindow window) {
  const int n = res.ring->nvars();
  if (i < 0 || i > n) throw Error("ext_deficiency: index outside [0, #variables]");
  if (window.lo > window.hi) throw Error("ext_deficiency: empty degree window");
  const int k = n - i;
  ExtBuilder ext(res, k);

  GradedModuleData out;
  out.ring = res.ring;
  out.window = window;
  for (int m = window.lo; m <= window.hi; ++m) {
    long long h = 0;
    for (const auto& mu : ext.multidegrees(m)) h += ext.block(mu).dim;
    out.hilbert[m] = h;
  }

  // variables grouped by weight: a linear form kills the module iff each weight part does
  std::map<MDeg, std::vector<int>> by_weight;
  for (int v = 0; v < n; ++v) by_weight[res.grading.var_weights[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& [w, vars] : by_weight) groups.push_back(vars);
  const Zp& f = res.ring->field();
  std::vector<Echelon> constraints;
  for (const auto& g : groups) constraints.emplace_back(g.size(), f);
  for (int m = window.lo; m < window.hi; ++m)
    if (out.hf(m) > 0) ext.annihilate(m, constraints, groups);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<Vec> cols(groups[g].size(), Vec(constraints[g].dim(), 0));
    for (std::size_t q = 0; q < constraints[g].dim(); ++q)
      for (std::size_t v = 0; v < groups[g].size(); ++v) cols[v][q] = constraints[g].rows()[q][v];
    for (const auto& c : kernel_of_columns(cols, constraints[g].dim(), f)) {
      LinearForm l;
      l.coeffs.assign(static_cast<std::size_t>(n), 0);
      for (std::size_t v = 0; v < groups[g].size(); ++v) l.coeffs[static_cast<std::size_t>(groups[g][v])] = c[v];
      out.annihilator.push_back(std::move(l));
    }
  }

  out.presentation.source = ext.source_;
  out.presentation.middle = ext.middle_;
  out.presentation.target = ext.target_;
  out.presentation.in = ext.in_;
  out.presentation.out = ext.out_;
  return out;
}

}  // namespace amd
