#include "amd/amdcheck.hpp"

#include <json.hpp>
#include <random>
#include <sstream>

#include "amd/generic.hpp"

namespace amd {

using json = nlohmann::ordered_json;

long long projecting_ring_betti(int r, int d, int i) {
  if (i < 1 || i > r - d) return 0;
  return (r + 1 - d) * binom(r - d, i) - binom(r - d, i + 1);
}

long long containing_scroll_betti(int r, int d, int i) {
  if (i < 1 || i >= r - d) return 0;
  return i * binom(r - d, i + 1);
}

IntPoly almost_minimal_numerator(int r, int d, int t) {
  const int n = r + 1;
  if (d < 0 || d >= n || t < 1 || t > d + 1) throw Error("almost_minimal_numerator: invalid (r, d, t)");
  IntPoly a = poly_mul(IntPoly{1, r + 1 - d}, one_minus_lambda_pow(n - d - 1));
  IntPoly b = poly_mul(IntPoly{0, 1}, one_minus_lambda_pow(n - t + 1));
  IntPoly out = poly_sub(a, b);
  poly_trim(out);
  return out;
}

namespace {

std::string poly_str(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k]) continue;
    const long long c = p[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const long long a = c < 0 ? -c : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "l";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

void require_amd(const AnalysisReport& rep, const char* what) {
  if (!rep.is_AMD) throw Error(std::string(what) + ": the variety is not of almost minimal degree");
}

// Collects failures for one family of indexed conditions.
class Family {
 public:
  explicit Family(std::string name) : name_(std::move(name)) {}
  void check(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  CheckResult result() const {
    if (count_ == 0) return {name_, true, "vacuous"};
    if (failures_.empty()) return {name_, true, std::to_string(count_) + " conditions hold"};
    return {name_, false, failures_};
  }

 private:
  std::string name_;
  int count_ = 0;
  std::string failures_;
};

std::string ineq(long long lo, long long x, long long hi) {
  return std::to_string(lo) + " <= " + std::to_string(x) + " <= " + std::to_string(hi);
}

}  // namespace

CheckResult check_hilbert_formula(const AnalysisReport& rep, const HilbertData& series) {
  require_amd(rep, "check_hilbert_formula");
  IntPoly expected = almost_minimal_numerator(rep.r, rep.d, rep.t);
  IntPoly residual = poly_sub(series.numerator, expected);
  poly_trim(residual);
  const bool ok = residual.empty() || (residual.size() == 1 && residual[0] == 0);
  return {"hilbert_formula", ok, ok ? "numerator " + poly_str(expected) : "residual " + poly_str(residual)};
}

CheckResult check_quadric_count(const AnalysisReport& rep) {
  require_amd(rep, "check_quadric_count");
  const long long expected = rep.t + binom(rep.r + 1 - rep.d, 2) - rep.d - 2;
  return {"quadric_count", rep.quadric_count == expected,
          "dim I_2 = " + std::to_string(rep.quadric_count) + ", formula " + std::to_string(expected)};
}

std::vector<CheckResult> check_betti_bounds(const AnalysisReport& rep, const BettiTable& B) {
  require_amd(rep, "check_betti_bounds");
  if (rep.t > rep.d) throw Error("check_betti_bounds: needs arithmetic depth t <= dim X");
  const int r = rep.r, d = rep.d, t = rep.t;
  auto u = [&](int i) { return B.at(i, i + 1); };
  auto v = [&](int i) { return B.at(i, i + 2); };
  auto c = [&](int i) { return containing_scroll_betti(r, d, i); };
  auto b = [&](int i) { return projecting_ring_betti(r, d, i); };
  auto C = [&](int i) { return binom(r - t + 2, i + 1); };
  const int top = r - t + 1;
  const int lo_u = r - 2 * d + t - 1;
  const int lo_v = r - 2 * d + t - 2;
  auto at = [](const char* s, int i) { return std::string(s) + "_" + std::to_string(i); };

  std::vector<CheckResult> out;
  Family shape("betti.shape");
  for (const auto& [ij, beta] : B.entries()) {
    const auto [i, j] = ij;
    if (!beta) continue;
    if (i == 0) shape.check(j == 0 && beta == 1, "beta_{0," + std::to_string(j) + "}");
    else shape.check(i <= top && (j == i + 1 || j == i + 2), "beta_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  out.push_back(shape.result());

  const long long u1 = t + binom(r + 1 - d, 2) - d - 2;
  out.push_back({"betti.u1_exact", u(1) == u1, "u_1 = " + std::to_string(u(1)) + ", formula " + std::to_string(u1)});

  Family um("betti.u_middle_bounds"), ue("betti.u_exact_window"), uz("betti.u_vanishing"), ub("betti.u_le_b");
  for (int i = 2; i < lo_u; ++i) um.check(c(i) <= u(i) && u(i) <= b(i), at("u", i) + ": " + ineq(c(i), u(i), b(i)));
  for (int i = std::max(lo_u, 1); i < r - d; ++i)
    ue.check(u(i) == c(i), at("u", i) + " = " + std::to_string(u(i)) + " != " + std::to_string(c(i)));
  for (int i = std::max(r - d, 1); i < top; ++i) uz.check(u(i) == 0, at("u", i) + " = " + std::to_string(u(i)));
  for (int i = 1; i <= top; ++i) ub.check(u(i) <= b(i), at("u", i) + " > b");
  out.push_back(um.result());
  out.push_back(ue.result());
  out.push_back(uz.result());
  out.push_back(ub.result());

  Family vm("betti.v_middle_bounds"), ve("betti.v_exact_window"), vt("betti.v_tail"), id("betti.v_minus_u_identity");
  for (int i = 1; i < lo_v; ++i) {
    const long long lo = std::max<long long>(0, C(i) - (i + 2) * binom(r - d, i + 1));
    vm.check(lo <= v(i) && v(i) <= C(i), at("v", i) + ": " + ineq(lo, v(i), C(i)));
  }
  for (int i = std::max(lo_v, 1); i < r - d; ++i) {
    const long long e = C(i) - (i + 2) * binom(r - d, i + 1);
    ve.check(v(i) == e, at("v", i) + " = " + std::to_string(v(i)) + " != " + std::to_string(e));
  }
  for (int i = std::max(r - d, 1); i <= top; ++i)
    vt.check(v(i) == C(i), at("v", i) + " = " + std::to_string(v(i)) + " != " + std::to_string(C(i)));
  for (int i = 1; i < r - d; ++i) {
    const long long e = C(i) - (r - d + 1) * binom(r - d, i + 1) + binom(r - d, i + 2);
    id.check(v(i) - u(i + 1) == e, at("v", i) + " - " + at("u", i + 1) + " != " + std::to_string(e));
  }
  out.push_back(vm.result());
  out.push_back(ve.result());
  out.push_back(vt.result());
  out.push_back(id.result());
  return out;
}

std::vector<CheckResult> check_deficiency_shapes(const AnalysisReport& rep,
                                                 const std::map<int, GradedModuleData>& K) {
  require_amd(rep, "check_deficiency_shapes");
  if (rep.t > rep.d) throw Error("check_deficiency_shapes: needs arithmetic depth t <= dim X");
  const int t = rep.t, d = rep.d;
  std::vector<CheckResult> out;

  Family van("deficiency.vanishing");
  for (const auto& [i, mod] : K)
    if (i != t && i != d + 1) van.check(mod.zero_on_window(), "K^" + std::to_string(i) + " is nonzero");
  out.push_back(van.result());

  if (auto it = K.find(d + 1); it != K.end()) {
    const auto& can = it->second;
    if (can.window.lo > d - 1 || can.window.hi < d) {
      out.push_back({"deficiency.beg_canonical", false, "window does not contain degrees d-1, d"});
    } else {
      int beg = 1 << 20;
      for (const auto& [m, h] : can.hilbert)
        if (h) beg = std::min(beg, m);
      out.push_back({"deficiency.beg_canonical", beg == d,
                     "beg K(A) = " + (beg == (1 << 20) ? std::string("none on window") : std::to_string(beg)) +
                         ", expected " + std::to_string(d)});
    }
  } else {
    out.push_back({"deficiency.beg_canonical", false, "K(A) not computed"});
  }

  auto it = K.find(t);
  if (it == K.end()) {
    out.push_back({"deficiency.Kt_hilbert", false, "K^t not computed"});
    return out;
  }
  const auto& Kt = it->second;
  // K^t = (polynomial ring in t-1 variables)(2-t)
  Family hf("deficiency.Kt_hilbert");
  for (const auto& [m, h] : Kt.hilbert) {
    const int e = m + 2 - t;
    const long long expected = e < 0 ? 0 : (t == 1 ? (e == 0 ? 1 : 0) : binom(e + t - 2, t - 2));
    hf.check(h == expected, "degree " + std::to_string(m) + ": " + std::to_string(h) + " != " + std::to_string(expected));
  }
  out.push_back(hf.result());
  const long long need = rep.r - t + 2;
  out.push_back({"deficiency.Kt_annihilator", static_cast<long long>(Kt.annihilator.size()) >= need,
                 std::to_string(Kt.annihilator.size()) + " independent linear forms, need " + std::to_string(need)});
  if (t == 1) {
    bool k1 = true;
    for (const auto& [m, h] : Kt.hilbert) k1 &= h == (m == -1 ? 1 : 0);
    out.push_back({"deficiency.K1_is_k(1)", k1, k1 ? "K^1 = k(1)" : "K^1 differs from k(1)"});
  }
  return out;
}

CheckResult check_gorenstein(const AnalysisReport& rep, const BettiTable& B, const GradedModuleData& can) {
  if (!rep.is_ACM) throw Error("check_gorenstein: not arithmetically Cohen-Macaulay");
  const long long last = B.total(B.pd());
  bool match = true;
  std::string bad;
  for (const auto& [m, h] : can.hilbert) {
    const long long e = m + 1 - rep.d;
    const long long expected = e < 0 ? 0 : rep.hilbert.hilbert_function(e);
    if (h != expected) {
      match = false;
      bad = "K(A)_" + std::to_string(m) + " = " + std::to_string(h) + " but A_" + std::to_string(e) + " = " +
            std::to_string(expected);
      break;
    }
  }
  std::string detail = "last Betti number " + std::to_string(last) + (match ? ", K(A) = A(1-d) on window" : ", " + bad);
  return {"gorenstein", last == 1 && match, detail};
}

GenusInvariants genus_invariants(const AnalysisReport& rep) {
  GenusInvariants g;
  long long h1 = 0;
  if (rep.t < 2) {
    auto it = rep.deficiency.find(1);
    if (it == rep.deficiency.end()) throw Error("genus_invariants: K^1(A) is needed when the depth is 1");
    h1 = it->second.hf(-1);
  }
  g.delta_genus = rep.degree - rep.codim - 1 - h1;
  g.sectional_genus = rep.d >= 1 ? 1 - rep.hilbert.chi.at(static_cast<std::size_t>(rep.d - 1)) : 1;
  return g;
}

bool AnalysisReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

AnalysisReport analyze(const GradedIdeal& I, const AnalysisOptions& opts) {
  bool any = false;
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    any = true;
    if (g.degree() == 0) throw Error("analyze: unit ideal");
    if (!g.is_homogeneous()) throw Error("analyze: inhomogeneous generator");
  }
  if (!any) throw Error("analyze: zero ideal");

  AnalysisReport rep;
  rep.nvars = I.nvars();
  rep.r = rep.nvars - 1;
  rep.hilbert = hilbert_series(I);
  const DimensionDegree dd = dimension_degree(rep.hilbert);
  rep.d = dd.dim;
  rep.codim = dd.codim;
  rep.degree = dd.degree;
  rep.quadric_count = binom(rep.nvars + 1, 2) - rep.hilbert.hilbert_function(2);
  rep.is_minimal_degree = rep.degree == rep.codim + 1;
  rep.is_AMD = rep.degree == rep.codim + 2;

  if (opts.resolve) {
    ResolutionOptions ro;
    ro.progress = opts.progress;
    MinimalResolution M = minimalize(free_resolution(I, ro));
    rep.betti = M.betti;
    rep.t = depth_from_betti(M.betti, rep.nvars);
    rep.reg = regularity(M.betti);
    rep.resolution = std::move(M.complex);
  } else {
    GenericInitial gin = generic_initial(I, opts.seed);
    rep.t = gin.depth;
    rep.reg = gin.reg - 1;
  }
  rep.is_ACM = rep.t == rep.d + 1;

  if (opts.resolve && opts.deficiency) {
    for (int i = 0; i <= rep.d + 1; ++i) {
      DegreeWindow w = opts.window;
      if (i == rep.d + 1) {
        w.lo = std::min(w.lo, rep.d - 2);
        w.hi = std::max(w.hi, rep.d + 2);
      }
      rep.deficiency.emplace(i, ext_deficiency(*rep.resolution, i, w));
    }
  }

  if (rep.betti) {
    IntPoly euler = rep.betti->euler_numerator();
    IntPoly num = rep.hilbert.numerator;
    poly_trim(euler);
    poly_trim(num);
    rep.checks.push_back({"betti_hilbert_identity", euler == num, "alternating Betti sum vs Hilbert numerator"});
  }
  if (rep.is_minimal_degree) {
    rep.checks.push_back({"minimal_degree_acm_reg1", rep.is_ACM && rep.reg == 1,
                          "t = " + std::to_string(rep.t) + ", reg A = " + std::to_string(rep.reg)});
  }
  if (rep.is_ACM && rep.betti && rep.deficiency.count(rep.d + 1)) {
    CheckResult g = check_gorenstein(rep, *rep.betti, rep.deficiency.at(rep.d + 1));
    rep.is_Gorenstein = g.pass;
    if (rep.is_AMD) rep.checks.push_back(g);
  }
  if (rep.t >= 2 || rep.deficiency.count(1)) {
    GenusInvariants gi = genus_invariants(rep);
    rep.delta_genus = gi.delta_genus;
    rep.sectional_genus = gi.sectional_genus;
  } else {
    rep.sectional_genus = rep.d >= 1 ? 1 - rep.hilbert.chi.at(static_cast<std::size_t>(rep.d - 1)) : 1;
  }

  if (rep.is_AMD) {
    rep.checks.push_back(check_hilbert_formula(rep, rep.hilbert));
    rep.checks.push_back(check_quadric_count(rep));
    rep.checks.push_back({"reg_A_bound", rep.is_ACM ? rep.reg <= 2 : rep.reg == 2,
                          "reg A = " + std::to_string(rep.reg)});
    if (rep.t <= rep.d && opts.scroll_projection && rep.betti)
      for (auto& c : check_betti_bounds(rep, *rep.betti)) rep.checks.push_back(std::move(c));
    if (rep.t <= rep.d && !rep.deficiency.empty())
      for (auto& c : check_deficiency_shapes(rep, rep.deficiency)) rep.checks.push_back(std::move(c));
    if (rep.delta_genus) {
      const long long want = rep.t == 1 ? 0 : 1;
      rep.checks.push_back({"genus.delta", *rep.delta_genus == want,
                            "Delta = " + std::to_string(*rep.delta_genus) + ", expected " + std::to_string(want)});
    }
    const long long want_gs = rep.is_ACM ? 1 : 0;
    rep.checks.push_back({"genus.sectional", rep.sectional_genus == want_gs,
                          "g_s = " + std::to_string(rep.sectional_genus) + ", expected " + std::to_string(want_gs)});
    if (rep.t <= rep.d || (rep.is_ACM && opts.non_normal)) rep.secant_cone_dim = rep.t - 1;
  }
  return rep;
}

std::string AnalysisReport::to_json() const {
  json j;
  j["nvars"] = nvars;
  j["r"] = r;
  j["d"] = d;
  j["codim"] = codim;
  j["degree"] = degree;
  j["t"] = t;
  j["reg"] = reg;
  j["is_AMD"] = is_AMD;
  j["is_minimal_degree"] = is_minimal_degree;
  j["is_ACM"] = is_ACM;
  j["is_Gorenstein"] = is_Gorenstein;
  j["delta_genus"] = delta_genus ? json(*delta_genus) : json(nullptr);
  j["sectional_genus"] = sectional_genus;
  j["quadric_count"] = quadric_count;
  j["secant_cone_dim"] = secant_cone_dim ? json(*secant_cone_dim) : json(nullptr);
  j["hilbert"] = {{"numerator", hilbert.numerator}, {"reduced", hilbert.reduced}, {"chi", hilbert.chi}};
  j["betti"] = betti ? json::parse(betti->to_json()) : json(nullptr);
  json def = json::object();
  for (const auto& [i, mod] : deficiency) {
    json h = json::array();
    for (const auto& [m, v] : mod.hilbert) h.push_back({m, v});
    def["K" + std::to_string(i)] = {{"window", {mod.window.lo, mod.window.hi}},
                                    {"hilbert", h},
                                    {"annihilator_linear_forms", mod.annihilator.size()}};
  }
  j["deficiency"] = def;
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  j["all_pass"] = all_pass();
  return j.dump(2);
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  os << "r = " << r << ", dim = " << d << ", codim = " << codim << ", degree = " << degree << "\n";
  os << "depth t = " << t << ", reg A = " << reg << "\n";
  os << "minimal degree: " << (is_minimal_degree ? "yes" : "no") << ", almost minimal degree: " << (is_AMD ? "yes" : "no")
     << ", ACM: " << (is_ACM ? "yes" : "no") << ", Gorenstein: " << (is_Gorenstein ? "yes" : "no") << "\n";
  os << "quadrics: " << quadric_count << ", sectional genus: " << sectional_genus;
  if (delta_genus) os << ", Delta-genus: " << *delta_genus;
  if (secant_cone_dim) os << ", dim Sec_p: " << *secant_cone_dim;
  os << "\nHilbert numerator: " << poly_str(hilbert.numerator) << "\n";
  if (betti) os << betti->to_text();
  for (const auto& [i, mod] : deficiency) {
    os << "K^" << i << ":";
    for (const auto& [m, h] : mod.hilbert) os << " " << h;
    os << "  (degrees " << mod.window.lo << ".." << mod.window.hi << ")\n";
  }
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return os.str();
}

HyperplaneSection hyperplane_section(const GradedIdeal& I, std::optional<LinearForm> form, std::uint64_t seed) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const Zp& f = R->field();
  if (n < 2) throw Error("hyperplane_section: need at least two variables");
  if (form && (form->coeffs.size() != static_cast<std::size_t>(n) || form->is_zero()))
    throw Error("hyperplane_section: the linear form is zero or has the wrong length");

  const HilbertData before = hilbert_series(I);
  HyperplaneSection out;
  out.depth_before = generic_initial(I, seed).depth;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, f.p - 1);
  const int max_attempts = form ? 1 : 8;
  for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
    LinearForm l;
    if (form) {
      l = *form;
    } else {
      l.coeffs.resize(static_cast<std::size_t>(n));
      for (auto& c : l.coeffs) c = coord(rng);
      if (l.is_zero()) continue;
    }
    if (normal_form(l.to_poly(R), I.gb()).is_zero()) {
      if (form) throw Error("hyperplane_section: the linear form lies in the ideal");
      continue;
    }
    int k = n - 1;
    while (l.coeffs[static_cast<std::size_t>(k)] == 0) --k;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v)
      if (v != k) names.push_back(R->name(v));
    RingPtr T = make_ring(names, R->prime());
    std::vector<Polynomial> forms;
    int pos = 0;
    for (int v = 0; v < n; ++v) forms.push_back(v == k ? Polynomial(T) : Polynomial::variable(T, pos++));
    const std::uint32_t inv = f.neg(f.inv(l.coeffs[static_cast<std::size_t>(k)]));
    for (int v = 0; v < n; ++v)
      if (v != k && l.coeffs[static_cast<std::size_t>(v)])
        forms[static_cast<std::size_t>(k)] =
            forms[static_cast<std::size_t>(k)] + forms[static_cast<std::size_t>(v)].scaled(f.mul(inv, l.coeffs[static_cast<std::size_t>(v)]));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
      Polynomial s = substitute(g, forms, T);
      if (!s.is_zero()) gens.push_back(s);
    }
    GradedIdeal sat = saturate_irrelevant(GradedIdeal(T, gens), seed + static_cast<std::uint64_t>(out.attempts));
    GradedIdeal section(T, minimal_generators(sat.generators()));
    const HilbertData after = hilbert_series(section);
    const bool generic = after.dim == before.dim - 1 && after.degree == before.degree;
    if (!generic && !form) continue;
    out.ideal = section;
    out.form = l;
    out.depth_after = generic_initial(section, seed).depth;
    return out;
  }
  throw Error("hyperplane_section: no generic hyperplane found after 8 attempts");
}

}  // namespace amd
