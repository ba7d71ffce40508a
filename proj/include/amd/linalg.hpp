#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amd/polyring.hpp"

namespace amd {

using Vec = std::vector<std::uint32_t>;

// Semi-echelon basis of a subspace of F_p^n, grown one vector at a time.
// Each stored row has a pivot equal to 1 and zeros at the pivots of all earlier rows.
class Echelon {
 public:
  Echelon(std::size_t n, const Zp& f) : n_(n), f_(f) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduce v in place; returns true if v became zero.
  bool reduce(Vec& v) const;
  // Reduce v and, if independent, insert it. Returns true if inserted.
  bool insert(Vec v);
  bool contains(Vec v) const { return reduce(v); }

 private:
  std::size_t n_;
  Zp f_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Kernel of the linear map whose columns are given (each column has length nrows).
std::vector<Vec> kernel_of_columns(const std::vector<Vec>& columns, std::size_t nrows, const Zp& f);
std::size_t rank_of(const std::vector<Vec>& vectors, std::size_t n, const Zp& f);
std::optional<Matrix> inverse(const Matrix& m, const Zp& f);
std::uint32_t determinant(Matrix m, const Zp& f);

// Scale-and-add: v += c*w (mod p) on the index range [from, n).
void axpy(Vec& v, const Vec& w, std::uint32_t c, const Zp& f, std::size_t from = 0);

}  // namespace amd
