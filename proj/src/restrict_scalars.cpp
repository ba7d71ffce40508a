#include "amd/resolve.hpp"

namespace amd {

namespace {

// Splits g = g0 + y g1 + ... by powers of y (variable 0 of the ring [y | S]) into polynomials over S.
std::vector<Polynomial> split_by_y(const Polynomial& g, const RingPtr& base) {
  std::vector<std::vector<Term>> parts;
  for (const auto& t : g.terms()) {
    const int a = t.m.e[0];
    if (static_cast<int>(parts.size()) <= a) parts.resize(static_cast<std::size_t>(a) + 1);
    Monomial m;
    for (int v = 1; v < kMaxVars; ++v) m.e[v - 1] = t.m.e[v];
    m.deg = static_cast<std::uint16_t>(t.m.deg - a);
    parts[static_cast<std::size_t>(a)].push_back({m, t.c});
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.emplace_back(base, std::move(p));
  return out;
}

}  // namespace

RestrictedScalars restrict_scalars_presentation(const GradedIdeal& J, int y) {
  const RingPtr& R = J.ring();
  const int n = R->nvars();
  if (y < 0 || y >= n) throw Error("restrict_scalars: variable index out of range");
  if (n < 2) throw Error("restrict_scalars: need at least one variable besides y");

  std::vector<std::string> names{R->name(y)}, base_names;
  std::vector<Polynomial> to_e(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (v != y) {
      names.push_back(R->name(v));
      base_names.push_back(R->name(v));
    }
  RingPtr E = make_ring(names, R->prime(), TermOrder::block(1));
  RestrictedScalars out;
  out.base = make_ring(base_names, R->prime());
  int pos = 1;
  for (int v = 0; v < n; ++v) to_e[static_cast<std::size_t>(v)] = Polynomial::variable(E, v == y ? 0 : pos++);

  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) gens.push_back(substitute(g, to_e, E));
  const GroebnerBasis gb = groebner_basis(gens, E->order());

  FreeModule F{out.base, {0, 1}};
  std::vector<FreeModuleElement> rel;
  const Polynomial zero(out.base);
  for (const auto& g : gb.elements) {
    auto parts = split_by_y(g, out.base);
    if (parts.size() > 2) continue;
    parts.resize(2, zero);
    rel.push_back({{parts[0], parts[1]}});
    if (parts[1].is_zero()) rel.push_back({{zero, parts[0]}});  // y * g
  }

  const Polynomial y2 = normal_form(Polynomial::monomial(E, Monomial::var(0, 2)), gb);
  auto sq = split_by_y(y2, out.base);
  if (sq.size() > 2) throw Error("restrict_scalars: S[y]/J is not generated by {1, y} over S");
  sq.resize(2, zero);
  out.y_squared_0 = sq[0];
  out.y_squared_1 = sq[1];
  out.relations = GradedSubmodule(F, rel);
  return out;
}

}  // namespace amd
