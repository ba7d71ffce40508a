#include "amd/groebner.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

#include "amd/linalg.hpp"

namespace amd {

int ModuleContext::cmp(const ModTerm& a, const ModTerm& b) const {
  if (order.front > 0) {
    bool fa = static_cast<int>(a.comp) < order.front, fb = static_cast<int>(b.comp) < order.front;
    if (fa != fb) return fa ? 1 : -1;
  }
  int da = degree(a), db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  int c = compare(a.m, b.m, ring->order());
  if (c) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

void sort_terms(SVec& v, const ModuleContext& ctx) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return ctx.cmp(a, b) > 0; });
  SVec out;
  const Zp& f = ctx.ring->field();
  for (const auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
      out.back().c = f.add(out.back().c, t.c);
    else
      out.push_back(t);
    if (out.back().c == 0) out.pop_back();
  }
  v = std::move(out);
}

namespace {

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m.e[i]) s |= 1u << i;
  return s;
}

struct TermKey {
  Monomial m;
  std::uint32_t comp;
  bool operator==(const TermKey& o) const { return comp == o.comp && m == o.m; }
};
struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const { return k.m.hash() * 31u + k.comp; }
};

// Sparse accumulator reducing one vector against a list of monic reducers.
class Reducer {
 public:
  explicit Reducer(const ModuleContext& ctx) : ctx_(ctx), f_(ctx.ring->field()) {}

  void add_reducer(const SVec* g) {
    red_.push_back(g);
    masks_.push_back(support_mask(g->front().m));
  }
  void clear_reducers() {
    red_.clear();
    masks_.clear();
  }

  // Full reduction: returns remainder with no term divisible by a reducer lead.
  SVec reduce(const SVec& v, bool tail = true) {
    acc_.clear();
    auto cmp = [this](const ModTerm& a, const ModTerm& b) { return ctx_.cmp(a, b) < 0; };
    std::priority_queue<ModTerm, std::vector<ModTerm>, decltype(cmp)> heap(cmp);
    for (const auto& t : v) {
      auto [it, fresh] = acc_.try_emplace(TermKey{t.m, t.comp}, 0);
      it->second = f_.add(it->second, t.c);
      if (fresh) heap.push(t);
    }
    SVec out;
    bool reducing = true;
    while (!heap.empty()) {
      ModTerm t = heap.top();
      heap.pop();
      auto it = acc_.find(TermKey{t.m, t.comp});
      std::uint32_t c = it->second;
      acc_.erase(it);
      if (c == 0) continue;
      const SVec* g = reducing ? find(t) : nullptr;
      if (!g) {
        out.push_back({t.m, t.comp, c});
        if (!tail) reducing = false;
        continue;
      }
      Monomial q = t.m / g->front().m;
      std::uint32_t s = f_.neg(c);
      for (std::size_t k = 1; k < g->size(); ++k) {
        const ModTerm& gt = (*g)[k];
        ModTerm nt{gt.m * q, gt.comp, f_.mul(gt.c, s)};
        auto [jt, fresh] = acc_.try_emplace(TermKey{nt.m, nt.comp}, 0);
        jt->second = f_.add(jt->second, nt.c);
        if (fresh) heap.push(nt);
      }
    }
    return out;
  }

  const SVec* find(const ModTerm& t) const {
    std::uint32_t mask = support_mask(t.m);
    const SVec* best = nullptr;
    for (std::size_t i = 0; i < red_.size(); ++i) {
      const ModTerm& l = red_[i]->front();
      if (l.comp != t.comp || (masks_[i] & ~mask) || !l.m.divides(t.m)) continue;
      if (!best || red_[i]->size() < best->size()) best = red_[i];
    }
    return best;
  }

 private:
  const ModuleContext& ctx_;
  Zp f_;
  std::vector<const SVec*> red_;
  std::vector<std::uint32_t> masks_;
  std::unordered_map<TermKey, std::uint32_t, TermKeyHash> acc_;
};

void make_monic(SVec& v, const Zp& f) {
  if (v.empty()) return;
  std::uint32_t s = f.inv(v.front().c);
  for (auto& t : v) t.c = f.mul(t.c, s);
}

int vec_degree(const SVec& v, const ModuleContext& ctx) { return ctx.degree(v.front()); }

struct Pair {
  int i, j;
  ModTerm lcm;  // coefficient unused
  int deg;
};

}  // namespace

SVec s_vector(const SVec& a, const SVec& b, const ModuleContext& ctx) {
  const Zp& f = ctx.ring->field();
  if (a.empty() || b.empty() || a.front().comp != b.front().comp) return {};
  Monomial l = lcm(a.front().m, b.front().m);
  Monomial qa = l / a.front().m, qb = l / b.front().m;
  std::uint32_t ca = f.inv(a.front().c), cb = f.inv(b.front().c);
  SVec out;
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back({a[k].m * qa, a[k].comp, f.mul(a[k].c, ca)});
  for (std::size_t k = 1; k < b.size(); ++k) out.push_back({b[k].m * qb, b[k].comp, f.neg(f.mul(b[k].c, cb))});
  sort_terms(out, ctx);
  return out;
}

std::vector<SVec> module_groebner(const std::vector<SVec>& input, const ModuleContext& ctx) {
  const Zp& f = ctx.ring->field();
  const bool product_criterion = ctx.rank() == 1;
  std::vector<SVec> inputs;
  for (auto v : input) {
    sort_terms(v, ctx);
    if (v.empty()) continue;
    int d = vec_degree(v, ctx);
    for (const auto& t : v)
      if (ctx.degree(t) != d) throw Error("groebner: inhomogeneous input");
    inputs.push_back(std::move(v));
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [&](const SVec& a, const SVec& b) { return vec_degree(a, ctx) < vec_degree(b, ctx); });

  std::vector<SVec> G;
  std::vector<char> active;
  std::vector<Pair> B;
  Reducer red(ctx);

  auto lead_lcm = [&](int i, int j) {
    return ModTerm{lcm(G[i].front().m, G[j].front().m), G[i].front().comp, 0};
  };
  auto same_comp = [&](int i, int j) { return G[i].front().comp == G[j].front().comp; };

  auto update = [&](int h) {
    const Monomial& lh = G[h].front().m;
    std::vector<int> C;
    for (int g = 0; g < h; ++g)
      if (active[g] && same_comp(g, h)) C.push_back(g);
    std::vector<int> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      int g1 = C[a];
      Monomial l1 = lcm(lh, G[g1].front().m);
      bool keep = product_criterion && coprime(lh, G[g1].front().m);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (lcm(lh, G[C[b]].front().m).divides(l1)) keep = false;
        for (int g2 : D)
          if (keep && lcm(lh, G[g2].front().m).divides(l1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::vector<Pair> nb;
    for (const auto& pr : B) {
      bool drop = false;
      if (same_comp(pr.i, h) && lh.divides(pr.lcm.m)) {
        Monomial a = lcm(G[pr.i].front().m, lh), b = lcm(G[pr.j].front().m, lh);
        drop = a != pr.lcm.m && b != pr.lcm.m;
      }
      if (!drop) nb.push_back(pr);
    }
    for (int g : D) {
      if (product_criterion && coprime(lh, G[g].front().m)) continue;
      ModTerm l = lead_lcm(g, h);
      nb.push_back({g, h, l, ctx.degree(l)});
    }
    B = std::move(nb);
    for (int g = 0; g < h; ++g)
      if (active[g] && same_comp(g, h) && lh.divides(G[g].front().m)) active[g] = 0;
  };

  auto rebuild_reducer = [&]() {
    red.clear_reducers();
    for (std::size_t g = 0; g < G.size(); ++g)
      if (active[g]) red.add_reducer(&G[g]);
  };

  std::size_t next_input = 0;
  while (!B.empty() || next_input < inputs.size()) {
    int D = 1 << 30;
    for (const auto& pr : B) D = std::min(D, pr.deg);
    if (next_input < inputs.size()) D = std::min(D, vec_degree(inputs[next_input], ctx));
    // everything of degree D: pairs first (ordered by lcm), then inputs
    for (;;) {
      std::vector<Pair> now, later;
      for (const auto& pr : B) (pr.deg == D ? now : later).push_back(pr);
      std::vector<SVec> cand;
      while (next_input < inputs.size() && vec_degree(inputs[next_input], ctx) == D) cand.push_back(inputs[next_input++]);
      if (now.empty() && cand.empty()) break;
      B = std::move(later);
      std::stable_sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
        int c = ctx.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
      });
      for (const auto& pr : now) cand.push_back(s_vector(G[pr.i], G[pr.j], ctx));
      for (auto& v : cand) {
        rebuild_reducer();
        SVec r = red.reduce(v);
        if (r.empty()) continue;
        make_monic(r, f);
        G.push_back(std::move(r));
        active.push_back(1);
        update(static_cast<int>(G.size()) - 1);
      }
    }
  }
  // reduced basis
  std::vector<SVec> out;
  for (std::size_t g = 0; g < G.size(); ++g)
    if (active[g]) out.push_back(G[g]);
  for (std::size_t k = 0; k < out.size(); ++k) {
    red.clear_reducers();
    for (std::size_t o = 0; o < out.size(); ++o)
      if (o != k) red.add_reducer(&out[o]);
    SVec r = red.reduce(out[k]);
    make_monic(r, f);
    out[k] = std::move(r);
  }
  std::sort(out.begin(), out.end(), [&](const SVec& a, const SVec& b) { return ctx.cmp(a.front(), b.front()) < 0; });
  return out;
}

SVec module_normal_form(const SVec& v, const std::vector<SVec>& gb, const ModuleContext& ctx) {
  Reducer red(ctx);
  for (const auto& g : gb) red.add_reducer(&g);
  SVec w = v;
  sort_terms(w, ctx);
  return red.reduce(w);
}

// ---------------------------------------------------------------- conversions

bool FreeModuleElement::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

int FreeModuleElement::degree(const FreeModule& F) const {
  int d = -1;
  for (int c = 0; c < F.rank(); ++c)
    for (const auto& t : entries[c].terms()) {
      int td = t.m.deg + F.twists[c];
      if (d >= 0 && td != d) throw Error("inhomogeneous module element");
      d = td;
    }
  return d;
}

SVec to_svec(const FreeModuleElement& v, const ModuleContext& ctx) {
  SVec out;
  for (std::size_t c = 0; c < v.entries.size(); ++c)
    for (const auto& t : v.entries[c].terms()) out.push_back({t.m, static_cast<std::uint32_t>(c), t.c});
  sort_terms(out, ctx);
  return out;
}

FreeModuleElement from_svec(const SVec& v, const FreeModule& F) {
  std::vector<std::vector<Term>> parts(F.rank());
  for (const auto& t : v) parts[t.comp].push_back({t.m, t.c});
  FreeModuleElement e;
  for (int c = 0; c < F.rank(); ++c) e.entries.emplace_back(F.ring, std::move(parts[c]));
  return e;
}

namespace {

ModuleContext ideal_context(const RingPtr& r) { return {r, {{0}, 0}}; }

SVec poly_to_svec(const Polynomial& p) {
  SVec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.m, 0, t.c});
  return v;
}

Polynomial svec_to_poly(const SVec& v, const RingPtr& r, std::uint32_t comp = 0) {
  std::vector<Term> ts;
  for (const auto& t : v)
    if (t.comp == comp) ts.push_back({t.m, t.c});
  return Polynomial(r, std::move(ts));
}

}  // namespace

// ---------------------------------------------------------------- ideals

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring_)) g = g.in_ring(ring_);
    if (!g.is_homogeneous()) throw Error("ideal generator is not homogeneous: " + g.str());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& GradedIdeal::gb(const TermOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->by_order[order.name()];
  if (!slot) slot = std::make_shared<GroebnerBasis>(groebner_basis(gens_.empty() ? std::vector<Polynomial>{} : gens_, order));
  if (slot->ring == nullptr) slot->ring = with_order(ring_, order);
  return *slot;
}

bool GradedIdeal::contains(const Polynomial& f) const {
  return normal_form(f.in_ring(gb().ring), gb()).is_zero();
}

bool GradedIdeal::is_zero() const { return gens_.empty(); }

std::string GradedIdeal::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].str();
  os << ">";
  return os.str();
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order) {
  GroebnerBasis out;
  if (gens.empty()) return out;
  RingPtr R = with_order(gens.front().ring(), order);
  out.ring = R;
  ModuleContext ctx = ideal_context(R);
  std::vector<SVec> in;
  for (const auto& g : gens) in.push_back(poly_to_svec(g.in_ring(R)));
  for (const auto& v : module_groebner(in, ctx)) out.elements.push_back(svec_to_poly(v, R));
  return out;
}

GroebnerBasis groebner_basis(const GradedIdeal& I, const TermOrder& order) {
  GroebnerBasis gb = I.gb(order);
  if (!gb.ring) gb.ring = with_order(I.ring(), order);
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.elements.empty()) return f;
  if (f.ring()->nvars() != gb.ring->nvars() || f.ring()->prime() != gb.ring->prime())
    throw Error("normal_form: ring mismatch");
  if (!(f.ring()->order() == gb.ring->order())) throw Error("normal_form: term order mismatch");
  ModuleContext ctx = ideal_context(gb.ring);
  std::vector<SVec> G;
  for (const auto& g : gb.elements) G.push_back(poly_to_svec(g));
  return svec_to_poly(module_normal_form(poly_to_svec(f), G, ctx), f.ring());
}

bool same_ideal(const GradedIdeal& a, const GradedIdeal& b) {
  const auto& ga = a.gb().elements;
  const auto& gb = b.gb(a.ring()->order()).elements;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

Polynomial normal_form_random_path(const Polynomial& f, const GroebnerBasis& gb, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Zp& F = f.ring()->field();
  Polynomial r = f;
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (term index, reducer index)
    for (std::size_t k = 0; k < r.terms().size(); ++k)
      for (std::size_t g = 0; g < gb.elements.size(); ++g)
        if (gb.elements[g].lead().m.divides(r.terms()[k].m)) options.push_back({k, g});
    if (options.empty()) return r;
    auto [k, g] = options[rng() % options.size()];
    const Term& t = r.terms()[k];
    const Polynomial& G = gb.elements[g];
    std::uint32_t c = F.mul(t.c, F.inv(G.lead().c));
    r = r - G.mul_term(t.m / G.lead().m, c);
  }
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  if (gb.elements.empty()) return true;
  ModuleContext ctx = ideal_context(gb.ring);
  std::vector<SVec> G;
  for (const auto& g : gb.elements) G.push_back(poly_to_svec(g));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!module_normal_form(s_vector(G[i], G[j], ctx), G, ctx).empty()) return false;
  return true;
}

// ---------------------------------------------------------------- elimination, quotients

namespace {

// map variable i of f's ring to variable perm[i] of `target` (perm[i] < 0: must not occur)
Polynomial remap(const Polynomial& f, const std::vector<int>& perm, const RingPtr& target) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (perm[i] < 0) throw Error("remap: eliminated variable present");
      m.e[perm[i]] = t.m.e[i];
    }
    m.deg = t.m.deg;
    ts.push_back({m, t.c});
  }
  return Polynomial(target, std::move(ts));
}

}  // namespace

GradedIdeal eliminate(const GradedIdeal& I, const std::vector<int>& front_vars) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  std::vector<char> is_front(n, 0);
  for (int v : front_vars) {
    if (v < 0 || v >= n) throw Error("eliminate: variable index out of range");
    is_front[v] = 1;
  }
  int k = 0;
  for (char c : is_front) k += c;
  if (k == 0 || k == n) throw Error("eliminate: front set must be a proper nonempty subset");
  std::vector<int> perm(n), back_perm(n, -1);
  std::vector<std::string> names, back_names;
  int pos = 0;
  for (int v = 0; v < n; ++v)
    if (is_front[v]) {
      perm[v] = pos++;
      names.push_back(R->name(v));
    }
  int bpos = 0;
  for (int v = 0; v < n; ++v)
    if (!is_front[v]) {
      perm[v] = pos++;
      back_perm[perm[v]] = bpos++;
      names.push_back(R->name(v));
      back_names.push_back(R->name(v));
    }
  RingPtr E = make_ring(names, R->prime(), TermOrder::block(k));
  RingPtr back = make_ring(back_names, R->prime(), TermOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(remap(g, perm, E));
  GroebnerBasis gb = groebner_basis(gens, E->order());
  std::vector<int> to_back(n, -1);
  for (int v = k; v < n; ++v) to_back[v] = back_perm[v];
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (int v = 0; v < k && pure; ++v)
        if (t.m.e[v]) pure = false;
    if (pure) out.push_back(remap(g, to_back, back));
  }
  return GradedIdeal(back, std::move(out));
}

namespace {

// Elements of the submodule generated by `gens` whose front components vanish; returned as the
// entries of the remaining components.
std::vector<SVec> eliminate_components(const std::vector<SVec>& gens, const ModuleContext& ctx) {
  std::vector<SVec> gb = module_groebner(gens, ctx);
  std::vector<SVec> out;
  for (auto& v : gb)
    if (static_cast<int>(v.front().comp) >= ctx.order.front) out.push_back(v);
  return out;
}

}  // namespace

GradedIdeal quotient_by(const GradedIdeal& I, const Polynomial& g) {
  const RingPtr& R = I.ring();
  if (g.is_zero()) throw Error("quotient by zero");
  if (!g.is_homogeneous()) throw Error("quotient: inhomogeneous element");
  ModuleContext ctx{R, {{0, g.degree()}, 1}};
  std::vector<SVec> gens;
  for (const auto& f : I.generators()) gens.push_back(poly_to_svec(f));
  SVec v = poly_to_svec(g.in_ring(R));
  v.push_back({Monomial{}, 1, 1});
  gens.push_back(v);
  std::vector<Polynomial> out;
  for (const auto& w : eliminate_components(gens, ctx)) out.push_back(svec_to_poly(w, R, 1));
  return GradedIdeal(R, std::move(out));
}

GradedIdeal intersect(const GradedIdeal& I, const GradedIdeal& J) {
  const RingPtr& R = I.ring();
  ModuleContext ctx{R, {{0, 0}, 1}};
  std::vector<SVec> gens;
  for (const auto& f : I.generators()) {
    SVec v = poly_to_svec(f);
    for (auto t : poly_to_svec(f)) {
      t.comp = 1;
      v.push_back(t);
    }
    gens.push_back(v);
  }
  for (const auto& g : J.generators()) gens.push_back(poly_to_svec(g.in_ring(R)));
  std::vector<Polynomial> out;
  for (const auto& w : eliminate_components(gens, ctx)) out.push_back(svec_to_poly(w, R, 1));
  return GradedIdeal(R, std::move(out));
}

GradedIdeal ideal_quotient(const GradedIdeal& I, const GradedIdeal& J) {
  if (J.is_zero()) throw Error("ideal_quotient: J = 0");
  std::optional<GradedIdeal> acc;
  for (const auto& g : J.generators()) {
    GradedIdeal q = quotient_by(I, g.in_ring(I.ring()));
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

GradedIdeal saturate(const GradedIdeal& I, const Polynomial& f) {
  if (f.is_zero()) throw Error("saturate: f = 0");
  GradedIdeal cur = I;
  for (;;) {
    GradedIdeal next = quotient_by(cur, f);
    if (same_ideal(cur, next)) return cur;
    cur = next;
  }
}

GradedIdeal saturate_irrelevant(const GradedIdeal& I, std::uint64_t seed) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const Zp& F = R->field();
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> h(n);
  for (int k = 0; k < n - 1; ++k) h[k] = static_cast<std::uint32_t>(rng() % F.p);
  h[n - 1] = 1;
  // psi: x_{n-1} -> x_{n-1} - sum h_k x_k ; psi(h) = x_{n-1}
  std::vector<Polynomial> fwd, back;
  for (int k = 0; k < n; ++k) {
    fwd.push_back(Polynomial::variable(R, k));
    back.push_back(Polynomial::variable(R, k));
  }
  for (int k = 0; k < n - 1; ++k) {
    if (!h[k]) continue;
    fwd[n - 1] = fwd[n - 1] - Polynomial::variable(R, k).scaled(h[k]);
    back[n - 1] = back[n - 1] + Polynomial::variable(R, k).scaled(h[k]);
  }
  RingPtr D = with_order(R, TermOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(g, fwd, D));
  GroebnerBasis gb = groebner_basis(gens, TermOrder::degrevlex());
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    int a = 255;
    for (const auto& t : g.terms()) a = std::min<int>(a, t.m.e[n - 1]);
    Polynomial q = g;
    if (a > 0) {
      std::vector<Term> ts;
      for (const auto& t : g.terms()) ts.push_back({t.m / Monomial::var(n - 1, a), t.c});
      q = Polynomial(D, std::move(ts));
    }
    out.push_back(substitute(q, back, R));
  }
  return GradedIdeal(R, std::move(out));
}

// ---------------------------------------------------------------- syzygies & minimal generators

namespace {

// Keep a minimal subset of homogeneous vectors generating the same submodule.
std::vector<SVec> minimal_subset(std::vector<SVec> vs, const ModuleContext& ctx) {
  std::stable_sort(vs.begin(), vs.end(), [&](const SVec& a, const SVec& b) {
    return vec_degree(a, ctx) < vec_degree(b, ctx);
  });
  const RingPtr& R = ctx.ring;
  const int n = R->nvars();
  std::vector<SVec> kept;
  std::size_t i = 0;
  while (i < vs.size()) {
    int D = vec_degree(vs[i], ctx);
    std::size_t j = i;
    while (j < vs.size() && vec_degree(vs[j], ctx) == D) ++j;
    // span of S_{D - deg k} * k for kept k (all of lower degree)
    std::unordered_map<TermKey, std::size_t, TermKeyHash> index;
    std::vector<SVec> span;
    auto enumerate = [&](int e, auto&& emit) {
      std::vector<int> ex(n, 0);
      auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
          ex[var] = left;
          emit(Monomial::from_exponents(ex));
          return;
        }
        for (int a = left; a >= 0; --a) {
          ex[var] = a;
          self(self, var + 1, left - a);
        }
        ex[var] = 0;
      };
      if (n == 0) {
        if (e == 0) emit(Monomial{});
        return;
      }
      rec(rec, 0, e);
    };
    for (const auto& k : kept) {
      int e = D - vec_degree(k, ctx);
      enumerate(e, [&](const Monomial& m) {
        SVec w;
        for (const auto& t : k) w.push_back({t.m * m, t.comp, t.c});
        span.push_back(std::move(w));
      });
    }
    auto idx = [&](const ModTerm& t) {
      auto [it, fresh] = index.try_emplace(TermKey{t.m, t.comp}, index.size());
      return it->second;
    };
    for (auto& w : span)
      for (auto& t : w) idx(t);
    for (std::size_t a = i; a < j; ++a)
      for (auto& t : vs[a]) idx(t);
    const std::size_t N = index.size();
    Echelon ech(N, R->field());
    auto dense = [&](const SVec& w) {
      Vec d(N, 0);
      for (const auto& t : w) d[index.at(TermKey{t.m, t.comp})] = t.c;
      return d;
    };
    for (const auto& w : span) ech.insert(dense(w));
    for (std::size_t a = i; a < j; ++a)
      if (ech.insert(dense(vs[a]))) kept.push_back(vs[a]);
    i = j;
  }
  return kept;
}

}  // namespace

GradedSubmodule::GradedSubmodule(FreeModule ambient, std::vector<FreeModuleElement> gens)
    : ambient_(std::move(ambient)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (static_cast<int>(g.entries.size()) != ambient_.rank()) throw Error("module element has wrong rank");
    g.degree(ambient_);
  }
}

const std::vector<SVec>& GradedSubmodule::gb() const {
  if (!gb_) {
    ModuleContext ctx = context();
    std::vector<SVec> in;
    for (const auto& g : gens_) in.push_back(to_svec(g, ctx));
    gb_ = std::make_shared<std::vector<SVec>>(module_groebner(in, ctx));
  }
  return *gb_;
}

GradedSubmodule syzygies(const GradedSubmodule& M) {
  const FreeModule& F = M.ambient();
  const int r = F.rank();
  std::vector<int> tw = F.twists;
  std::vector<int> syz_tw;
  std::vector<SVec> gens;
  ModuleContext tmp{F.ring, {F.twists, 0}};
  for (const auto& g : M.generators()) {
    int d = g.degree(F);
    if (d < 0) d = 0;  // zero generator: any twist works, take 0
    syz_tw.push_back(d);
  }
  for (int t : syz_tw) tw.push_back(t);
  ModuleContext ctx{F.ring, {tw, r}};
  for (std::size_t k = 0; k < M.generators().size(); ++k) {
    SVec v = to_svec(M.generators()[k], tmp);
    v.push_back({Monomial{}, static_cast<std::uint32_t>(r + k), 1});
    sort_terms(v, ctx);
    gens.push_back(v);
  }
  std::vector<SVec> syz;
  for (auto v : eliminate_components(gens, ctx)) {
    for (auto& t : v) t.comp -= r;
    syz.push_back(v);
  }
  ModuleContext sctx{F.ring, {syz_tw, 0}};
  for (auto& v : syz) sort_terms(v, sctx);
  FreeModule S{F.ring, syz_tw};
  std::vector<FreeModuleElement> out;
  for (const auto& v : minimal_subset(syz, sctx)) out.push_back(from_svec(v, S));
  return GradedSubmodule(S, std::move(out));
}

GradedSubmodule syzygies(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error("syzygies: empty generator list");
  FreeModule F{gens.front().ring(), {0}};
  std::vector<FreeModuleElement> els;
  for (const auto& g : gens) els.push_back(FreeModuleElement{{g}});
  return syzygies(GradedSubmodule(F, std::move(els)));
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  RingPtr R = gens.front().ring();
  ModuleContext ctx = ideal_context(R);
  std::vector<SVec> vs;
  for (const auto& g : gens)
    if (!g.is_zero()) vs.push_back(poly_to_svec(g));
  std::vector<Polynomial> out;
  for (const auto& v : minimal_subset(vs, ctx)) out.push_back(svec_to_poly(v, R));
  return out;
}

}  // namespace amd
