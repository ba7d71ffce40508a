#include "amd/linalg.hpp"

namespace amd {

void axpy(Vec& v, const Vec& w, std::uint32_t c, const Zp& f, std::size_t from) {
  if (c == 0) return;
  const std::uint64_t p = f.p;
  const std::uint64_t cc = c;
  const std::size_t n = w.size();
  for (std::size_t j = from; j < n; ++j) {
    if (w[j] == 0) continue;
    v[j] = static_cast<std::uint32_t>((v[j] + cc * w[j]) % p);
  }
}

bool Echelon::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t a = v[pivots_[r]];
    if (a != 0) axpy(v, rows_[r], f_.neg(a), f_);
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool Echelon::insert(Vec v) {
  if (reduce(v)) return false;
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  std::uint32_t s = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, s);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<Vec> kernel_of_columns(const std::vector<Vec>& columns, std::size_t nrows, const Zp& f) {
  const std::size_t ncols = columns.size();
  // rows of the form [column | tracking]
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
  std::vector<Vec> kernel;
  for (std::size_t k = 0; k < ncols; ++k) {
    Vec v(nrows + ncols, 0);
    for (std::size_t i = 0; i < nrows; ++i) v[i] = columns[k][i];
    v[nrows + k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t a = v[piv[r]];
      if (a != 0) axpy(v, rows[r], f.neg(a), f);
    }
    std::size_t p = 0;
    while (p < nrows && v[p] == 0) ++p;
    if (p == nrows) {
      kernel.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(nrows), v.end());
    } else {
      std::uint32_t s = f.inv(v[p]);
      for (auto& x : v) x = f.mul(x, s);
      rows.push_back(std::move(v));
      piv.push_back(p);
    }
  }
  return kernel;
}

std::size_t rank_of(const std::vector<Vec>& vectors, std::size_t n, const Zp& f) {
  Echelon e(n, f);
  for (const auto& v : vectors) e.insert(v);
  return e.dim();
}

std::optional<Matrix> inverse(const Matrix& m, const Zp& f) {
  const std::size_t n = m.size();
  Matrix a(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j] % f.p;
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[r], a[c]);
    std::uint32_t s = f.inv(a[c][c]);
    for (auto& x : a[c]) x = f.mul(x, s);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && a[i][c] != 0) axpy(a[i], a[c], f.neg(a[i][c]), f);
  }
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::uint32_t determinant(Matrix a, const Zp& f) {
  const std::size_t n = a.size();
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    std::uint32_t s = f.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i)
      if (a[i][c] != 0) axpy(a[i], a[c], f.neg(f.mul(a[i][c], s)), f);
  }
  return det;
}

}  // namespace amd
