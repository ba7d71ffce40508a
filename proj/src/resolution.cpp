#include "amd/resolve.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "column_ops.hpp"

namespace amd {

namespace detail {

std::vector<Vec> dense_columns(const std::vector<ColumnSpec>& specs, const std::vector<SVec>& images,
                               RowIndex& rows, const Zp& f) {
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> sparse(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& [g, mono] = specs[k];
    for (const auto& t : images[g]) {
      auto it = rows.try_emplace(RowKey{t.comp, t.m * mono}, rows.size()).first;
      sparse[k].push_back({it->second, t.c});
    }
  }
  std::vector<Vec> dense(specs.size(), Vec(rows.size(), 0));
  for (std::size_t k = 0; k < specs.size(); ++k)
    for (auto [r, c] : sparse[k]) dense[k][r] = f.add(dense[k][r], c);
  return dense;
}

}  // namespace detail

using detail::ColumnSpec;
using detail::RowIndex;
using detail::RowKey;

std::vector<int> FreeComplex::ranks() const {
  std::vector<int> r;
  for (const auto& m : modules) r.push_back(m.rank());
  return r;
}

// ---------------------------------------------------------------- Betti tables

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long b) {
  if (b == 0) return;
  auto& slot = entries_[{i, j}];
  slot += b;
  if (slot == 0) entries_.erase({i, j});
}

int BettiTable::pd() const {
  if (entries_.empty()) throw Error("BettiTable: empty table");
  int p = 0;
  for (const auto& [k, v] : entries_)
    if (v) p = std::max(p, k.first);
  return p;
}

int BettiTable::reg() const {
  if (entries_.empty()) throw Error("BettiTable: empty table");
  int r = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [k, v] : entries_)
    if (v) r = std::max(r, k.second - k.first);
  return r;
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) s += v;
  return s;
}

std::vector<long long> BettiTable::row(int shift, int last) const {
  std::vector<long long> r;
  for (int i = 1; i <= last; ++i) r.push_back(at(i, i + shift));
  return r;
}

IntPoly BettiTable::euler_numerator() const {
  IntPoly p;
  for (const auto& [k, v] : entries_) {
    if (k.second < 0) throw Error("euler_numerator: negative degree");
    if (static_cast<int>(p.size()) <= k.second) p.resize(k.second + 1, 0);
    p[k.second] += (k.first % 2 ? -v : v);
  }
  poly_trim(p);
  return p;
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j;
  j["nvars"] = nvars_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, v] : entries_) arr.push_back({k.first, k.second, v});
  j["entries"] = arr;
  j["pd"] = pd();
  j["reg"] = reg();
  j["depth"] = depth();
  return j.dump();
}

std::string to_json(const BettiTable& b) { return b.to_json(); }

std::string BettiTable::to_text() const {
  std::ostringstream os;
  const int p = pd();
  const bool uv = reg() == 2 && at(0, 0) == 1 && total(0) == 1;
  auto cell = [](long long v, int w) {
    std::string s = std::to_string(v);
    return std::string(w > static_cast<int>(s.size()) ? w - s.size() : 0, ' ') + s;
  };
  int w = 3;
  for (const auto& [k, v] : entries_) w = std::max(w, static_cast<int>(std::to_string(v).size()) + 1);
  if (uv) {
    os << "  i |";
    for (int i = 1; i <= p; ++i) os << cell(i, w);
    os << "\n u_i|";
    for (int i = 1; i <= p; ++i) os << cell(at(i, i + 1), w);
    os << "\n v_i|";
    for (int i = 1; i <= p; ++i) os << cell(at(i, i + 2), w);
    os << "\n";
    return os.str();
  }
  int lo = 0, hi = reg();
  for (const auto& [k, v] : entries_) lo = std::min(lo, k.second - k.first);
  os << "     |";
  for (int i = 0; i <= p; ++i) os << cell(i, w);
  os << "\n";
  for (int s = lo; s <= hi; ++s) {
    os << cell(s, 4) << " |";
    for (int i = 0; i <= p; ++i) {
      long long v = at(i, i + s);
      os << (v ? cell(v, w) : std::string(w - 1, ' ') + "-");
    }
    os << "\n";
  }
  return os.str();
}

int depth_from_betti(const BettiTable& b, int nvars) { return nvars - b.pd(); }
int regularity(const BettiTable& b) { return b.reg(); }

BettiTable betti_table(const FreeComplex& c) {
  BettiTable b(c.ring->nvars());
  for (int i = 0; i <= c.length(); ++i)
    for (int deg : c.modules[i].degrees) b.add(i, deg, 1);
  return b;
}

// ---------------------------------------------------------------- Schreyer frame

namespace {

struct FrameElt {
  Monomial m;
  std::uint32_t parent;
  int deg;
  MDeg md;
};

std::vector<Monomial> minimal_monomials(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

// Next level of the frame: for each element x, the minimal monomials m_y / gcd(m_x, m_y) over
// later siblings y.
std::vector<FrameElt> next_frame_level(const std::vector<FrameElt>& level, const Grading& G) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t k = 0; k < level.size(); ++k) groups[level[k].parent].push_back(k);
  std::vector<FrameElt> out;
  for (const auto& [parent, idx] : groups) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const FrameElt& x = level[idx[a]];
      std::vector<Monomial> cand;
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const Monomial& my = level[idx[b]].m;
        cand.push_back(my / gcd(x.m, my));
      }
      for (const auto& q : minimal_monomials(std::move(cand)))
        out.push_back({q, idx[a], x.deg + q.deg, x.md + G.of(q)});
    }
  }
  return out;
}

struct ModuleGB {
  ModuleContext ctx;
  std::vector<SVec> gb;
};

ModuleGB module_gb(const RingPtr& ring, const std::vector<int>& twists, const std::vector<SVec>& gens) {
  ModuleGB out{{with_order(ring, TermOrder::degrevlex()), {twists, 0}}, {}};
  std::vector<SVec> sorted;
  for (auto g : gens) {
    if (g.empty()) continue;
    sort_terms(g, out.ctx);
    sorted.push_back(std::move(g));
  }
  out.gb = module_groebner(sorted, out.ctx);
  return out;
}

std::vector<FrameElt> first_frame_level(const ModuleGB& M, const Grading& G, const std::vector<MDeg>& colmd) {
  std::vector<FrameElt> lvl;
  const auto& twists = M.ctx.order.twists;
  for (const auto& v : M.gb) {
    const ModTerm& t = v.front();
    lvl.push_back({t.m, t.comp, t.m.deg + twists[t.comp], G.of(t.m) + colmd[t.comp]});
  }
  return lvl;
}

// Multigraded Betti numbers of F/M from Koszul homology: beta_{i,mu} = dim H_i(K(x) (x) F/M)_mu.
class KoszulBetti {
 public:
  KoszulBetti(const ModuleGB& M, const Grading& G, const std::vector<MDeg>& colmd, int nvars)
      : M_(M), G_(G), colmd_(colmd), n_(nvars), table_(G, nvars) {
    leads_.resize(colmd.size());
    for (const auto& g : M.gb) leads_[g.front().comp].push_back(g.front().m);
  }

  long long betti(int i, const MDeg& mu) {
    auto [dim_i, rank_i] = differential_rank(i, mu);
    if (dim_i == 0) return 0;
    auto [dim_up, rank_up] = differential_rank(i + 1, mu);
    (void)dim_up;
    return static_cast<long long>(dim_i) - static_cast<long long>(rank_i + rank_up);
  }

 private:
  struct Basis {
    std::vector<std::pair<std::uint32_t, Monomial>> elts;
  };

  const Basis& basis(const MDeg& d) {
    auto it = bases_.find(d);
    if (it != bases_.end()) return it->second;
    Basis b;
    for (std::uint32_t c = 0; c < colmd_.size(); ++c)
      for (const auto& m : table_.get(d - colmd_[c])) {
        bool standard = true;
        for (const auto& l : leads_[c])
          if (l.divides(m)) {
            standard = false;
            break;
          }
        if (standard) b.elts.push_back({c, m});
      }
    return bases_.emplace(d, std::move(b)).first->second;
  }

  const SVec& times(int v, std::uint32_t c, const Monomial& m) {
    auto key = detail::RowKey{c * 64u + static_cast<std::uint32_t>(v), m};
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    SVec x{{m * Monomial::var(v), c, 1}};
    return products_.emplace(key, module_normal_form(x, M_.gb, M_.ctx)).first->second;
  }

  const std::vector<std::pair<std::uint32_t, MDeg>>& subsets(int k) {
    auto it = subsets_.find(k);
    if (it != subsets_.end()) return it->second;
    std::vector<std::pair<std::uint32_t, MDeg>> out;
    if (k >= 0 && k <= n_) {
      auto rec = [&](auto&& self, int start, int depth, std::uint32_t mask, MDeg md) -> void {
        if (depth == k) {
          out.push_back({mask, md});
          return;
        }
        for (int v = start; v < n_; ++v) self(self, v + 1, depth + 1, mask | (1u << v), md + G_.var_weights[v]);
      };
      rec(rec, 0, 0, 0u, MDeg{});
    }
    return subsets_.emplace(k, std::move(out)).first->second;
  }

  // (dim K_{i,mu}, rank of d: K_{i,mu} -> K_{i-1,mu})
  std::pair<std::size_t, std::size_t> differential_rank(int i, const MDeg& mu) {
    if (i < 0 || i > n_) return {0, 0};
    std::vector<std::pair<std::uint32_t, const Basis*>> parts;
    std::size_t dim = 0;
    for (const auto& [mask, md] : subsets(i)) {
      const Basis& b = basis(mu - md);
      if (b.elts.empty()) continue;
      parts.push_back({mask, &b});
      dim += b.elts.size();
    }
    if (dim == 0 || i == 0) return {dim, 0};
    const Zp& f = M_.ctx.ring->field();
    detail::RowIndex rows;
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> sparse;
    for (const auto& [mask, b] : parts) {
      for (const auto& [c, m] : b->elts) {
        std::vector<std::pair<std::size_t, std::uint32_t>> col;
        int below = 0;
        for (int v = 0; v < n_; ++v) {
          if (!(mask & (1u << v))) continue;
          std::uint32_t rest = mask & ~(1u << v);
          bool neg = below % 2;
          ++below;
          for (const auto& t : times(v, c, m)) {
            auto key = detail::RowKey{rest * 64u + t.comp, t.m};
            auto it = rows.try_emplace(key, rows.size()).first;
            col.push_back({it->second, neg ? f.neg(t.c) : t.c});
          }
        }
        sparse.push_back(std::move(col));
      }
    }
    std::vector<Vec> dense(sparse.size(), Vec(rows.size(), 0));
    for (std::size_t k = 0; k < sparse.size(); ++k)
      for (auto [r, c] : sparse[k]) dense[k][r] = f.add(dense[k][r], c);
    return {dim, rank_of(dense, rows.size(), f)};
  }

  const ModuleGB& M_;
  const Grading& G_;
  std::vector<MDeg> colmd_;
  int n_;
  MonomialTable table_;
  std::vector<std::vector<Monomial>> leads_;
  std::map<MDeg, Basis> bases_;
  std::unordered_map<detail::RowKey, SVec, detail::RowKeyHash> products_;
  std::map<int, std::vector<std::pair<std::uint32_t, MDeg>>> subsets_;
};

}  // namespace

std::vector<std::map<int, long long>> schreyer_frame_counts(const RingPtr& ring, const std::vector<int>& twists,
                                                            const std::vector<SVec>& gens) {
  Grading G = standard_grading(ring->nvars());
  std::vector<MDeg> colmd(twists.size());
  for (std::size_t c = 0; c < twists.size(); ++c) colmd[c].v[0] = twists[c];
  std::vector<std::map<int, long long>> counts(1);
  for (int t : twists) counts[0][t] += 1;
  auto lvl = first_frame_level(module_gb(ring, twists, gens), G, colmd);
  while (!lvl.empty()) {
    counts.emplace_back();
    for (const auto& e : lvl) counts.back()[e.deg] += 1;
    lvl = next_frame_level(lvl, G);
  }
  return counts;
}

// ---------------------------------------------------------------- resolution

namespace {

bool column_homogeneous(const SVec& v, const std::vector<int>& twists, int& deg) {
  if (v.empty()) return false;
  deg = v.front().m.deg + twists[v.front().comp];
  for (const auto& t : v)
    if (t.m.deg + twists[t.comp] != deg) return false;
  return true;
}

}  // namespace

FreeComplex free_resolution(const RingPtr& ring, const std::vector<int>& twists, std::vector<SVec> gens,
                            const ResolutionOptions& opts) {
  const int n = ring->nvars();
  const Zp& f = ring->field();
  for (int t : twists)
    if (t < 0) throw Error("free_resolution: negative column twists are not supported");
  std::vector<SVec> kept;
  for (auto& g : gens) {
    if (g.empty()) continue;
    for (const auto& t : g)
      if (t.comp >= twists.size()) throw Error("free_resolution: component out of range");
    detail::canonicalize_column(g, *ring);
    if (g.empty()) continue;
    int deg;
    if (!column_homogeneous(g, twists, deg)) throw Error("free_resolution: inhomogeneous generator");
    kept.push_back(std::move(g));
  }
  gens = std::move(kept);

  auto [G, colmd] = detect_grading(gens, n, twists);
  FreeComplex C;
  C.ring = ring;
  C.grading = G;
  GradedFreeModule F0;
  F0.degrees = twists;
  F0.mdegs = colmd;
  C.modules.push_back(F0);
  if (gens.empty()) return C;

  GradedFreeModule F1;
  for (const auto& g : gens) {
    F1.degrees.push_back(g.front().m.deg + twists[g.front().comp]);
    F1.mdegs.push_back(G.of(g.front().m) + colmd[g.front().comp]);
  }
  C.modules.push_back(F1);
  C.maps.push_back(gens);

  MonomialTable table(G, n);
  const ModuleGB mgb = module_gb(ring, twists, gens);
  auto frame = first_frame_level(mgb, G, colmd);
  KoszulBetti koszul(mgb, G, colmd, n);
  const bool use_koszul = twists.size() <= 64;
  std::set<MDeg> given_mdegs(F1.mdegs.begin(), F1.mdegs.end());

  for (int level = 2; level <= n + 1; ++level) {
    if (opts.max_level >= 0 && level > opts.max_level) break;
    frame = next_frame_level(frame, G);
    // candidate multidegrees for new generators, grouped by total degree
    std::map<int, std::set<MDeg>> cand;
    for (const auto& e : frame) cand[e.deg].insert(e.md);
    if (level == 2)
      for (int k = 0; k < F1.rank(); ++k) cand[F1.degrees[k]].insert(F1.mdegs[k]);
    if (cand.empty()) break;

    const GradedFreeModule& Fprev = C.modules[level - 1];
    const std::vector<SVec>& dprev = C.maps[level - 2];
    GradedFreeModule Fnew;
    std::vector<SVec> dnew;

    for (const auto& [j, mds] : cand) {
      long long added = 0;
      auto tstart = std::chrono::steady_clock::now();
      std::size_t maxc = 0, maxr = 0;
      for (const MDeg& mu : mds) {
        const long long expected = use_koszul ? koszul.betti(level, mu) : -1;
        const bool forced = level == 2 && given_mdegs.count(mu);
        if (expected == 0 && !forced) continue;
        std::vector<ColumnSpec> specs;
        for (int g = 0; g < Fprev.rank(); ++g) {
          if (Fprev.degrees[g] > j) continue;
          for (const auto& mono : table.get(mu - Fprev.mdegs[g])) specs.push_back({g, mono});
        }
        if (specs.empty()) continue;
        RowIndex rows;
        auto cols = detail::dense_columns(specs, dprev, rows, f);
        maxc = std::max(maxc, specs.size());
        maxr = std::max(maxr, rows.size());
        auto ker = kernel_of_columns(cols, rows.size(), f);
        if (ker.empty()) continue;

        std::unordered_map<RowKey, std::size_t, detail::RowKeyHash> colidx;
        for (std::size_t k = 0; k < specs.size(); ++k) colidx[RowKey{specs[k].first, specs[k].second}] = k;
        Echelon E(specs.size(), f);
        for (int h = 0; h < Fnew.rank(); ++h) {
          if (Fnew.degrees[h] >= j) continue;
          for (const auto& mono : table.get(mu - Fnew.mdegs[h])) {
            Vec v(specs.size(), 0);
            for (const auto& t : dnew[h]) v[colidx.at(RowKey{t.comp, t.m * mono})] = t.c;
            E.insert(std::move(v));
          }
        }
        long long found = 0;
        for (auto& kv : ker) {
          if (!E.insert(kv)) continue;
          ++found;
          SVec col;
          for (std::size_t k = 0; k < specs.size(); ++k)
            if (kv[k]) col.push_back({specs[k].second, specs[k].first, kv[k]});
          detail::canonicalize_column(col, *ring);
          Fnew.degrees.push_back(j);
          Fnew.mdegs.push_back(mu);
          dnew.push_back(std::move(col));
          ++added;
        }
        if (level > 2 && expected >= 0 && found != expected)
          throw Error("free_resolution: kernel count disagrees with Koszul homology");
      }
      if (opts.progress)
        std::cerr << "  level " << level << " degree " << j << ": " << added << " generators (" << mds.size()
                  << " blocks, max " << maxc << "x" << maxr << ", "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - tstart).count() << "s)\n";
    }
    if (Fnew.rank() == 0) break;
    C.modules.push_back(std::move(Fnew));
    C.maps.push_back(std::move(dnew));
  }
  return C;
}

FreeComplex free_resolution(const GradedIdeal& I, const ResolutionOptions& opts) {
  std::vector<SVec> gens;
  for (const auto& g : I.generators()) {
    SVec v;
    for (const auto& t : g.terms()) v.push_back({t.m, 0, t.c});
    gens.push_back(std::move(v));
  }
  return free_resolution(I.ring(), {0}, std::move(gens), opts);
}

FreeComplex free_resolution(const GradedSubmodule& M, const ResolutionOptions& opts) {
  std::vector<SVec> gens;
  for (const auto& g : M.generators()) {
    SVec v;
    for (std::size_t c = 0; c < g.entries.size(); ++c)
      for (const auto& t : g.entries[c].terms()) v.push_back({t.m, static_cast<std::uint32_t>(c), t.c});
    gens.push_back(std::move(v));
  }
  return free_resolution(M.ambient().ring, M.ambient().twists, std::move(gens), opts);
}

// ---------------------------------------------------------------- checks

bool is_complex(const FreeComplex& c) {
  const Zp& f = c.ring->field();
  for (int i = 1; i < c.length(); ++i) {
    const auto& lower = c.d(i);
    for (const auto& col : c.d(i + 1)) {
      detail::ColumnAccumulator acc(f);
      for (const auto& t : col) acc.add(lower[t.comp], t.c, t.m);
      if (!acc.result(*c.ring).empty()) return false;
    }
  }
  return true;
}

bool has_unit_entries(const FreeComplex& c) {
  for (const auto& m : c.maps)
    for (const auto& col : m)
      for (const auto& t : col)
        if (t.m.is_one()) return true;
  return false;
}

namespace {

std::map<MDeg, std::vector<ColumnSpec>> blocks_in_degree(const GradedFreeModule& F, int j, MonomialTable& table) {
  std::map<MDeg, std::vector<ColumnSpec>> blocks;
  for (int g = 0; g < F.rank(); ++g) {
    if (F.degrees[g] > j) continue;
    for (const auto& [md, monos] : table.of_degree(j - F.degrees[g]))
      for (const auto& m : monos) blocks[md + F.mdegs[g]].push_back({static_cast<std::uint32_t>(g), m});
  }
  return blocks;
}

}  // namespace

std::vector<long long> homology_dims(const FreeComplex& c, int j) {
  const Zp& f = c.ring->field();
  MonomialTable table(c.grading, c.ring->nvars());
  std::vector<long long> out(c.length() + 1, 0);
  for (int i = 1; i <= c.length(); ++i) {
    auto blocks = blocks_in_degree(c.modules[i], j, table);
    for (const auto& [mu, specs] : blocks) {
      RowIndex rows;
      auto cols = detail::dense_columns(specs, c.d(i), rows, f);
      long long rk = static_cast<long long>(rank_of(cols, rows.size(), f));
      long long rk_next = 0;
      if (i < c.length()) {
        std::vector<ColumnSpec> up;
        const auto& Fn = c.modules[i + 1];
        for (int g = 0; g < Fn.rank(); ++g)
          if (Fn.degrees[g] <= j)
            for (const auto& m : table.get(mu - Fn.mdegs[g])) up.push_back({static_cast<std::uint32_t>(g), m});
        if (!up.empty()) {
          RowIndex r2;
          auto c2 = detail::dense_columns(up, c.d(i + 1), r2, f);
          rk_next = static_cast<long long>(rank_of(c2, r2.size(), f));
        }
      }
      out[i] += static_cast<long long>(specs.size()) - rk - rk_next;
    }
  }
  return out;
}

}  // namespace amd
