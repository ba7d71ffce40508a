#include <algorithm>

#include "amd/varieties.hpp"

namespace amd {

PointCoordinates coordinates_for_point(const Point& p, int pivot, const Zp& f) {
  const int n = static_cast<int>(p.size());
  if (pivot < 0 || pivot >= n) throw Error("projection: pivot out of range");
  if (p[static_cast<std::size_t>(pivot)] == 0) throw Error("projection: pivot coordinate of the point is zero");
  PointCoordinates pc;
  pc.pivot = pivot;
  const std::uint32_t inv = f.inv(p[static_cast<std::size_t>(pivot)]);
  for (int a = 0; a < n; ++a) {
    LinearForm x, y;
    x.coeffs.assign(static_cast<std::size_t>(n), 0);
    y.coeffs.assign(static_cast<std::size_t>(n), 0);
    x.coeffs[static_cast<std::size_t>(a)] = 1;
    y.coeffs[static_cast<std::size_t>(a)] = 1;
    if (a != pivot) {
      const std::uint32_t ratio = f.mul(p[static_cast<std::size_t>(a)], inv);
      x.coeffs[static_cast<std::size_t>(pivot)] = ratio;
      y.coeffs[static_cast<std::size_t>(pivot)] = f.neg(ratio);
    }
    pc.x_of_y.push_back(std::move(x));
    pc.y_of_x.push_back(std::move(y));
  }
  return pc;
}

Projection project_from_point(const GradedIdeal& I, const Point& p, std::optional<int> pivot) {
  const int n = I.nvars();
  if (static_cast<int>(p.size()) != n) throw Error("projection: point has the wrong number of coordinates");
  if (std::all_of(p.begin(), p.end(), [](std::uint32_t c) { return c == 0; })) throw Error("projection: zero vector");
  if (I.generators().empty()) throw Error("projection: the zero ideal has no points off it");
  bool on = true;
  for (const auto& g : I.generators())
    if (g.evaluate(p) != 0) {
      on = false;
      break;
    }
  if (on) throw Error("projection: the point lies on the variety");

  int piv = -1;
  if (pivot) {
    piv = *pivot;
  } else {
    for (int a = n - 1; a >= 0; --a)
      if (p[static_cast<std::size_t>(a)] != 0) {
        piv = a;
        break;
      }
  }
  const Zp& f = I.ring()->field();
  Projection out;
  out.coords = coordinates_for_point(p, piv, f);
  Matrix M;
  for (const auto& l : out.coords.x_of_y) M.push_back(l.coeffs);
  std::vector<Polynomial> moved;
  for (const auto& g : I.generators()) moved.push_back(apply_linear_change(g, M));
  GradedIdeal image = eliminate(GradedIdeal(I.ring(), moved), {piv});
  out.ideal = GradedIdeal(image.ring(), minimal_generators(image.generators()));
  return out;
}

}  // namespace amd
