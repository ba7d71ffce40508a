#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amd/groebner.hpp"

namespace amd {

// Rational normal scroll S(d_1,...,d_l), possibly a cone with a vertex of dimension `vertex`.
struct ScrollSpec {
  std::vector<int> degrees;
  int vertex = -1;

  int scroll_dim() const { return static_cast<int>(degrees.size()); }
  int n() const;          // the scroll spans P^n
  int nvars() const;      // n + 1 + (vertex + 1)
  int dim() const;        // dimension of the cone
  int degree() const;     // sum of d_i
  std::vector<int> a() const;  // a_i = i - 1 + d_1 + ... + d_i, i = 1..l-1
  std::string str() const;
  static ScrollSpec parse(const std::string& text);  // "S(d1,...,dl)" or "S(d1,...,dl)+vertex:h"
};

// 2 x c matrix of linear forms.
struct LinearMatrix {
  RingPtr ring;
  std::vector<std::vector<LinearForm>> rows;  // rows[0], rows[1], each of length cols()

  int cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  Polynomial entry(int r, int c) const { return rows[r][c].to_poly(ring); }
  std::vector<Polynomial> minors() const;
  std::string str() const;
};

struct Scroll {
  ScrollSpec spec;
  LinearMatrix matrix;
  GradedIdeal ideal;
  std::vector<int> vertex_vars;  // variables absent from the matrix
};

Scroll scroll_ideal(const ScrollSpec& spec, std::uint32_t prime = kDefaultPrime);
GradedIdeal veronese_ideal(std::uint32_t prime = kDefaultPrime);
GradedIdeal pfaffian_fixture(std::uint32_t prime = kDefaultPrime);

using Point = std::vector<std::uint32_t>;
// Parses "e9" (coordinate point) or a comma-separated coordinate list.
Point parse_point(const std::string& text, int nvars, std::uint32_t prime);
std::string point_str(const Point& p, std::uint32_t prime);
// Seeded random point off the variety (retries until some generator is nonzero at it).
Point random_point_off(const GradedIdeal& I, std::uint64_t seed);

// Change of coordinates moving p to the coordinate point e_pivot:
//   y_a = x_a - (c_a / c_pivot) x_pivot (a != pivot), y_pivot = x_pivot.
// x_of_y[a] is the linear form expressing x_a in the y variables.
struct PointCoordinates {
  int pivot = -1;
  std::vector<LinearForm> x_of_y;
  std::vector<LinearForm> y_of_x;
};
PointCoordinates coordinates_for_point(const Point& p, int pivot, const Zp& f);

struct Projection {
  GradedIdeal ideal;        // vanishing ideal of the image, in the variables other than the pivot
  PointCoordinates coords;  // the coordinates used
};
// Projects V(I) from p.  The pivot defaults to the last nonzero coordinate of p.
Projection project_from_point(const GradedIdeal& I, const Point& p, std::optional<int> pivot = std::nullopt);

// Kronecker normal form of a 1-generic 2 x c matrix.
struct ScrollNormalForm {
  std::vector<LinearForm> basis;  // basis y_0..y_m of the span of the entries
  std::vector<int> blocks;        // block degrees, ascending
  int m = -1;
  int vertex_dim = 0;             // s - m - 1 for the ambient P^s
};
ScrollNormalForm scroll_normal_form(const LinearMatrix& N);

struct OneGenericResult {
  bool falsified = false;
  std::vector<std::uint32_t> v, w;  // witness with v N w = 0 when falsified
};
// Randomized falsifier.  For each sampled row combination v the columns w with vNw = 0 are found
// exactly, so a sweep over all of P^1(F_p) is an exact test over F_p.
OneGenericResult one_generic_test(const LinearMatrix& N, std::size_t samples, std::uint64_t seed);

struct ContainingScroll {
  int i = -1, j = -1;          // the chosen columns, identified by their top-row variable
  std::uint32_t delta = 0;     // c_i c_{j+1} - c_j c_{i+1}
  PointCoordinates coords;     // y-coordinates; the image lives in the variables other than i+1
  RingPtr target;              // ring of the image
  LinearMatrix n_matrix;       // N over `target`
  ScrollNormalForm normal_form;
  // certificate
  bool minors_in_scroll_ideal = false;   // I_2(N) lies in I(X~)
  bool free_of_pivot = false;            // y_{i+1} absent from N
  std::optional<bool> minors_in_image;   // checked against the projected ideal when requested
  int dim_scroll = -1;                   // dim X~
  int dim_y = -1;                        // dim Y from the Hilbert polynomial of I_2(N)
  int vertex_source = -1;                // dim Sing X~
  int vertex_y = -1;                     // dim Sing Y
  bool ok() const;
};
ContainingScroll containing_scroll(const Scroll& X, const Point& p, bool check_image = true);

}  // namespace amd
