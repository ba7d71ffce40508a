#include <algorithm>
#include <random>

#include "amd/hilbert.hpp"
#include "amd/linalg.hpp"
#include "amd/varieties.hpp"

namespace amd {

namespace {

// Basis of span(vectors) in reduced row echelon form, with the pivot column of each row.
struct SpanBasis {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  // coordinates of a vector known to lie in the span
  Vec coords(const Vec& v) const {
    Vec c(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) c[k] = v[pivots[k]];
    return c;
  }
};

SpanBasis span_basis(const std::vector<Vec>& vectors, std::size_t n, const Zp& f) {
  Echelon e(n, f);
  for (const auto& v : vectors) e.insert(v);
  SpanBasis b{e.rows(), e.pivots()};
  for (std::size_t l = b.rows.size(); l-- > 0;)
    for (std::size_t k = 0; k < l; ++k) {
      const std::uint32_t c = b.rows[k][b.pivots[l]];
      if (c) axpy(b.rows[k], b.rows[l], f.neg(c), f);
    }
  return b;
}

void lf_axpy(LinearForm& a, const LinearForm& b, std::uint32_t c, const Zp& f) {
  for (std::size_t v = 0; v < a.coeffs.size(); ++v) a.coeffs[v] = f.add(a.coeffs[v], f.mul(c, b.coeffs[v]));
}

void col_axpy(LinearMatrix& M, int dst, int src, std::uint32_t c, const Zp& f) {
  for (int r = 0; r < 2; ++r) lf_axpy(M.rows[r][dst], M.rows[r][src], c, f);
}

LinearForm drop_variable(const LinearForm& l, int v) {
  LinearForm out;
  for (std::size_t k = 0; k < l.coeffs.size(); ++k)
    if (static_cast<int>(k) != v) out.coeffs.push_back(l.coeffs[k]);
  return out;
}

// Index of the single variable in a form that is exactly one variable, else -1.
int single_variable(const LinearForm& l) {
  int v = -1;
  for (std::size_t k = 0; k < l.coeffs.size(); ++k) {
    if (l.coeffs[k] == 0) continue;
    if (l.coeffs[k] != 1 || v >= 0) return -1;
    v = static_cast<int>(k);
  }
  return v;
}

}  // namespace

ScrollNormalForm scroll_normal_form(const LinearMatrix& N) {
  const Zp& f = N.ring->field();
  const std::size_t nv = static_cast<std::size_t>(N.ring->nvars());
  const int c = N.cols();
  if (c == 0) throw Error("scroll_normal_form: empty matrix");
  std::vector<Vec> entries;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < c; ++k) entries.push_back(N.rows[r][k].coeffs);
  SpanBasis B = span_basis(entries, nv, f);
  const int dim = static_cast<int>(B.rows.size());
  const int h = dim - c;
  if (h < 1) throw Error("scroll_normal_form: the entries span too small a space for a 1-generic matrix");

  // P, Q: coordinates of the two rows, one vector per column
  std::vector<Vec> P, Q;
  for (int k = 0; k < c; ++k) {
    P.push_back(B.coords(N.rows[0][k].coeffs));
    Q.push_back(B.coords(N.rows[1][k].coeffs));
  }
  // Left kernel of the pencil s P^T + t Q^T in degree k: unknowns u_0..u_k, equations
  // P u_{b-1} + Q u_b = 0 for b = 0..k+1.
  auto kernel_dim = [&](int k) -> long long {
    const std::size_t unknowns = static_cast<std::size_t>((k + 1) * dim);
    const std::size_t eqs = static_cast<std::size_t>((k + 2) * c);
    std::vector<Vec> cols(unknowns, Vec(eqs, 0));
    for (int a = 0; a <= k; ++a)
      for (int v = 0; v < dim; ++v) {
        Vec& col = cols[static_cast<std::size_t>(a * dim + v)];
        for (int j = 0; j < c; ++j) {
          col[static_cast<std::size_t>((a + 1) * c + j)] = P[j][v];  // s^{a+1}
          col[static_cast<std::size_t>(a * c + j)] = Q[j][v];        // s^a
        }
      }
    return static_cast<long long>(unknowns) - static_cast<long long>(rank_of(cols, eqs, f));
  };

  ScrollNormalForm out;
  long long prev_kernel = 0, prev_count = 0;
  for (int k = 0; prev_count < h; ++k) {
    if (k > c + 1) throw Error("scroll_normal_form: matrix is not 1-generic (pencil has extra Kronecker blocks)");
    const long long kd = kernel_dim(k);
    const long long count = kd - prev_kernel;  // number of minimal indices <= k
    for (long long q = prev_count; q < count; ++q) out.blocks.push_back(k);
    prev_kernel = kd;
    prev_count = count;
  }
  int total = 0;
  for (int b : out.blocks) total += b;
  if (static_cast<int>(out.blocks.size()) != h || total != c ||
      std::find(out.blocks.begin(), out.blocks.end(), 0) != out.blocks.end())
    throw Error("scroll_normal_form: matrix is not 1-generic");
  for (const auto& row : B.rows) out.basis.push_back(LinearForm{row});
  out.m = dim - 1;
  out.vertex_dim = static_cast<int>(nv) - 1 - out.m - 1;
  return out;
}

OneGenericResult one_generic_test(const LinearMatrix& N, std::size_t samples, std::uint64_t seed) {
  const Zp& f = N.ring->field();
  const std::size_t nv = static_cast<std::size_t>(N.ring->nvars());
  OneGenericResult res;
  auto probe = [&](std::uint32_t v0, std::uint32_t v1) {
    std::vector<Vec> forms;
    for (int k = 0; k < N.cols(); ++k) {
      Vec r(nv);
      for (std::size_t x = 0; x < nv; ++x)
        r[x] = f.add(f.mul(v0, N.rows[0][k].coeffs[x]), f.mul(v1, N.rows[1][k].coeffs[x]));
      forms.push_back(std::move(r));
    }
    auto ker = kernel_of_columns(forms, nv, f);
    if (ker.empty()) return false;
    res.falsified = true;
    res.v = {v0, v1};
    res.w = ker.front();
    return true;
  };
  if (probe(1, 0) || probe(0, 1)) return res;
  if (samples >= static_cast<std::size_t>(f.p) + 1) {
    for (std::uint32_t l = 1; l < f.p; ++l)
      if (probe(1, l)) return res;
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, f.p - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::uint32_t a = coord(rng), b = coord(rng);
    if (a == 0 && b == 0) continue;
    if (probe(a, b)) return res;
  }
  return res;
}

bool ContainingScroll::ok() const {
  const int gap = vertex_y - vertex_source;
  return free_of_pivot && minors_in_scroll_ideal && minors_in_image.value_or(true) && dim_y == dim_scroll + 1 &&
         gap >= 0 && gap <= 3;
}

ContainingScroll containing_scroll(const Scroll& X, const Point& p, bool check_image) {
  const RingPtr& R = X.matrix.ring;
  const Zp& f = R->field();
  const int nv = R->nvars();
  if (static_cast<int>(p.size()) != nv) throw Error("containing_scroll: point has the wrong number of coordinates");
  bool on = true;
  for (const auto& g : X.ideal.generators())
    if (g.evaluate(p) != 0) on = false;
  if (on) throw Error("containing_scroll: the point lies on the scroll");

  // column tops: column k is (x_s, x_{s+1})^T
  std::vector<int> tops;
  for (int k = 0; k < X.matrix.cols(); ++k) {
    const int s = single_variable(X.matrix.rows[0][k]);
    if (s < 0 || single_variable(X.matrix.rows[1][k]) != s + 1)
      throw Error("containing_scroll: matrix is not in scroll layout");
    tops.push_back(s);
  }
  auto c = [&](int v) { return p[static_cast<std::size_t>(v)]; };

  ContainingScroll out;
  int ci = -1, cj = -1;  // column positions
  for (std::size_t a = 0; a < tops.size() && ci < 0; ++a)
    for (std::size_t b = 0; b < tops.size(); ++b) {
      if (a == b) continue;
      const int i = tops[a], j = tops[b];
      const std::uint32_t delta = f.sub(f.mul(c(i), c(j + 1)), f.mul(c(j), c(i + 1)));
      if (delta != 0 && c(i + 1) != 0) {
        ci = static_cast<int>(a);
        cj = static_cast<int>(b);
        out.i = i;
        out.j = j;
        out.delta = delta;
        break;
      }
    }
  if (ci < 0) throw Error("containing_scroll: no admissible column pair (point on the scroll?)");
  const int i = out.i, j = out.j, piv = i + 1;
  out.coords = coordinates_for_point(p, piv, f);

  // M~: M in y-coordinates
  LinearMatrix M{R, {{}, {}}};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < X.matrix.cols(); ++k) {
      LinearForm l;
      l.coeffs.assign(static_cast<std::size_t>(nv), 0);
      for (int v = 0; v < nv; ++v) {
        const std::uint32_t a = X.matrix.rows[r][k].coeffs[static_cast<std::size_t>(v)];
        if (a) lf_axpy(l, out.coords.x_of_y[static_cast<std::size_t>(v)], a, f);
      }
      M.rows[r].push_back(std::move(l));
    }
  const std::uint32_t inv = f.inv(c(piv));
  // U -> U': first row minus (c_i/c_{i+1}) second row, then column j minus (c_{j+1}/c_{i+1}) column i
  const std::uint32_t row_factor = f.mul(c(i), inv);
  for (int k = 0; k < M.cols(); ++k) lf_axpy(M.rows[0][k], M.rows[1][k], f.neg(row_factor), f);
  col_axpy(M, cj, ci, f.neg(f.mul(c(j + 1), inv)), f);

  auto coef = [&](int r, int k, int v) { return M.rows[r][k].coeffs[static_cast<std::size_t>(v)]; };
  const std::uint32_t gamma = coef(0, cj, piv);  // -delta / c_{i+1}^2
  if (gamma != f.neg(f.mul(out.delta, f.mul(inv, inv))) || single_variable(M.rows[0][ci]) != i ||
      single_variable(M.rows[1][ci]) != piv || coef(1, cj, piv) != 0)
    throw Error("containing_scroll: internal error, U' has an unexpected shape");

  // clear y_{i+1} from the remaining columns
  for (int k = 0; k < M.cols(); ++k) {
    if (k == ci || k == cj) continue;
    const std::uint32_t beta = coef(1, k, piv);
    if (beta) col_axpy(M, k, ci, f.neg(beta), f);
    const std::uint32_t alpha = coef(0, k, piv);
    if (alpha) col_axpy(M, k, cj, f.neg(f.mul(alpha, f.inv(gamma))), f);
  }

  // N: delete the two U' columns
  LinearMatrix full{R, {{}, {}}};
  for (int k = 0; k < M.cols(); ++k) {
    if (k == ci || k == cj) continue;
    for (int r = 0; r < 2; ++r) full.rows[r].push_back(M.rows[r][k]);
  }
  out.free_of_pivot = true;
  for (int r = 0; r < 2; ++r)
    for (const auto& l : full.rows[r])
      if (l.coeffs[static_cast<std::size_t>(piv)] != 0) out.free_of_pivot = false;

  // I_2(N) in I(X~): pull the minors back to x-coordinates
  std::vector<Polynomial> y_in_x;
  for (const auto& l : out.coords.y_of_x) y_in_x.push_back(l.to_poly(R));
  out.minors_in_scroll_ideal = true;
  for (const auto& m : full.minors())
    if (!normal_form(substitute(m, y_in_x, R), X.ideal.gb()).is_zero()) out.minors_in_scroll_ideal = false;

  std::vector<std::string> names;
  for (int v = 0; v < nv; ++v)
    if (v != piv) names.push_back(R->name(v));
  out.target = make_ring(names, R->prime());
  out.n_matrix.ring = out.target;
  out.n_matrix.rows.resize(2);
  for (int r = 0; r < 2; ++r)
    for (const auto& l : full.rows[r]) out.n_matrix.rows[r].push_back(drop_variable(l, piv));

  if (check_image) {
    Projection proj = project_from_point(X.ideal, p, piv);
    bool in = true;
    for (const auto& m : out.n_matrix.minors())
      if (!normal_form(m.in_ring(proj.ideal.ring()), proj.ideal.gb()).is_zero()) in = false;
    out.minors_in_image = in;
  }

  out.normal_form = scroll_normal_form(out.n_matrix);
  out.dim_scroll = X.spec.dim();
  out.vertex_source = X.spec.vertex;
  out.vertex_y = out.normal_form.vertex_dim;
  out.dim_y = hilbert_series(GradedIdeal(out.target, out.n_matrix.minors())).projective_dim();
  return out;
}

}  // namespace amd
