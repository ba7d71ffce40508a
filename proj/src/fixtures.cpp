#include "amd/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

namespace amd {

namespace {

Fixture scroll_projection(std::string name, std::string description, const std::string& spec, std::string point,
                          bool core, FixtureExpectation e, bool non_normal = false) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.scroll = ScrollSpec::parse(spec);
  f.point = std::move(point);
  f.core = core;
  f.non_normal = non_normal;
  f.expect = std::move(e);
  return f;
}

FixtureExpectation threefold_in_p11(int t, std::vector<long long> u, std::vector<long long> v, int secant) {
  FixtureExpectation e;
  e.r = 11;
  e.d = 3;
  e.codim = 8;
  e.degree = 10;
  e.t = t;
  e.u = std::move(u);
  e.v = std::move(v);
  e.quadrics = e.u.front();
  e.secant_cone_dim = secant;
  return e;
}

// Non-normal Del Pezzo: a birational projection of S(2, r-2) or S(1, 1, r-3).
FixtureExpectation del_pezzo(int r, int d) {
  FixtureExpectation e;
  e.r = r;
  e.d = d;
  e.codim = r - d;
  e.degree = r - d + 2;  // codim + 2; the matrix of the threefold case has degree r - 1
  e.t = d + 1;
  e.acm = true;
  e.gorenstein = true;
  e.secant_cone_dim = d;
  return e;
}

std::vector<Fixture> make_registry() {
  std::vector<Fixture> out;
  out.push_back(scroll_projection(
      "ex6.1A", "S(2,2,6) in P^12 projected from e9", "S(2,2,6)", "e9", true,
      threefold_in_p11(1, {32, 130, 234, 234, 140, 48, 7, 0, 0, 0, 0}, {0, 20, 155, 456, 728, 728, 486, 220, 66, 12, 1},
                       0)));
  out.push_back(scroll_projection(
      "ex6.1B", "S(2,2,6) in P^12 projected from e10", "S(2,2,6)", "e10", true,
      threefold_in_p11(1, {32, 131, 234, 234, 140, 48, 7, 0, 0, 0, 0}, {1, 20, 155, 456, 728, 728, 486, 220, 66, 12, 1},
                       0)));
  out.push_back(scroll_projection(
      "ex6.1C", "S(2,4,4) in P^12 projected from e10", "S(2,4,4)", "e10", true,
      threefold_in_p11(1, {32, 133, 248, 234, 140, 48, 7, 0, 0, 0, 0}, {3, 34, 155, 456, 728, 728, 486, 220, 66, 12, 1},
                       0)));
  out.push_back(scroll_projection(
      "ex6.2A", "S(3,3,4) in P^12 projected from e6", "S(3,3,4)", "e6", true,
      threefold_in_p11(2, {33, 142, 278, 284, 155, 48, 7, 0, 0, 0}, {1, 9, 40, 141, 266, 266, 156, 55, 11, 1}, 1)));
  out.push_back(scroll_projection(
      "ex6.2B", "S(2,4,4) in P^12 projected from e1", "S(2,4,4)", "e1", true,
      threefold_in_p11(3, {34, 151, 314, 364, 230, 69, 7, 0, 0}, {0, 0, 0, 6, 35, 56, 36, 10, 1}, 2)));
  for (int r : {5, 4, 6})
    out.push_back(scroll_projection("ex6.3A" + (r == 5 ? std::string() : "-r" + std::to_string(r)),
                                    "S(2," + std::to_string(r - 2) + ") in P^" + std::to_string(r + 1) + " projected from e1",
                                    "S(2," + std::to_string(r - 2) + ")", "e1", r == 5, del_pezzo(r, 2), true));
  for (int r : {5, 6}) {
    std::string point = "0,1,1";
    for (int k = 3; k < r + 2; ++k) point += ",0";
    out.push_back(scroll_projection("ex6.3B" + (r == 5 ? std::string() : "-r" + std::to_string(r)),
                                    "S(1,1," + std::to_string(r - 3) + ") in P^" + std::to_string(r + 1) +
                                        " projected from (0:1:1:0:...:0)",
                                    "S(1,1," + std::to_string(r - 3) + ")", point, r == 5, del_pezzo(r, 3), true));
  }
  {
    Fixture f;
    f.name = "ex6.4";
    f.description = "4x4 Pfaffians of a generic 5x5 skew-symmetric matrix of linear forms in P^9";
    f.builtin = "pfaffian";
    f.core = true;
    FixtureExpectation& e = f.expect;
    e.r = 9;
    e.d = 6;
    e.codim = 3;
    e.degree = 5;
    e.t = 7;
    e.betti = {{{1, 2}, 5}, {{2, 3}, 5}};
    e.acm = true;
    e.gorenstein = true;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "veronese-proj";
    f.description = "Veronese surface in P^5 projected from the rank 3 point (1:0:0:1:0:1)";
    f.builtin = "veronese";
    f.point = "1,0,0,1,0,1";
    FixtureExpectation& e = f.expect;
    e.r = 4;
    e.d = 2;
    e.codim = 2;
    e.degree = 4;
    e.t = 1;
    e.quadrics = 0;
    out.push_back(std::move(f));
  }
  return out;
}

CheckResult expect_eq(const std::string& name, long long got, long long want) {
  return {"expect." + name, got == want, std::to_string(got) + (got == want ? " == " : " != ") + std::to_string(want)};
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> registry = make_registry();
  return registry;
}

const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : fixture_registry())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : fixture_registry()) known += " " + f.name;
  throw Error("unknown fixture '" + name + "'; known:" + known);
}

FixtureInput build_fixture(const Fixture& fx, std::uint32_t prime) {
  FixtureInput in;
  GradedIdeal source;
  if (fx.scroll) {
    in.scroll = scroll_ideal(*fx.scroll, prime);
    source = in.scroll->ideal;
  } else if (fx.builtin == "pfaffian") {
    source = pfaffian_fixture(prime);
  } else if (fx.builtin == "veronese") {
    source = veronese_ideal(prime);
  } else {
    throw Error("fixture '" + fx.name + "' has no source variety");
  }
  if (fx.point.empty()) {
    in.ideal = source;
    return in;
  }
  in.point = parse_point(fx.point, source.nvars(), prime);
  in.ideal = project_from_point(source, *in.point).ideal;
  return in;
}

std::vector<CheckResult> compare_expectation(const FixtureExpectation& e, const AnalysisReport& rep) {
  std::vector<CheckResult> out{expect_eq("r", rep.r, e.r),           expect_eq("d", rep.d, e.d),
                               expect_eq("codim", rep.codim, e.codim), expect_eq("degree", rep.degree, e.degree),
                               expect_eq("t", rep.t, e.t),           expect_eq("reg", rep.reg, e.reg)};
  out.push_back({"expect.is_AMD", rep.is_AMD, rep.is_AMD ? "deg = codim + 2" : "deg != codim + 2"});
  out.push_back({"expect.is_ACM", rep.is_ACM == e.acm, rep.is_ACM ? "ACM" : "not ACM"});
  if (e.gorenstein || e.acm)
    out.push_back({"expect.is_Gorenstein", rep.is_Gorenstein == e.gorenstein, rep.is_Gorenstein ? "Gorenstein" : "not Gorenstein"});
  if (e.quadrics) out.push_back(expect_eq("quadrics", rep.quadric_count, *e.quadrics));
  if (e.secant_cone_dim) {
    const bool ok = rep.secant_cone_dim && *rep.secant_cone_dim == *e.secant_cone_dim;
    out.push_back({"expect.secant_cone_dim", ok,
                   (rep.secant_cone_dim ? std::to_string(*rep.secant_cone_dim) : std::string("absent")) + " vs " +
                       std::to_string(*e.secant_cone_dim)});
  }
  if (!e.u.empty() || !e.v.empty() || !e.betti.empty()) {
    if (!rep.betti) {
      out.push_back({"expect.betti", false, "no Betti table computed"});
      return out;
    }
    const BettiTable& B = *rep.betti;
    auto row = [&](const std::vector<long long>& want, int shift, const char* label) {
      if (want.empty()) return;
      const int last = std::max<int>(static_cast<int>(want.size()), B.pd());
      std::vector<long long> got = B.row(shift, last);
      std::vector<long long> padded = want;
      padded.resize(got.size(), 0);
      std::string detail;
      for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i] != padded[i])
          detail += (detail.empty() ? "" : "; ") + std::string(label) + "_" + std::to_string(i + 1) + " = " +
                    std::to_string(got[i]) + " != " + std::to_string(padded[i]);
      out.push_back({std::string("expect.") + label + "_row", detail.empty(), detail.empty() ? "exact" : detail});
    };
    row(e.u, 1, "u");
    row(e.v, 2, "v");
    for (const auto& [ij, b] : e.betti)
      out.push_back(expect_eq("beta_" + std::to_string(ij.first) + "," + std::to_string(ij.second),
                              B.at(ij.first, ij.second), b));
  }
  return out;
}

void override_expectation(FixtureExpectation& e, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw Error("expectation override must look like key=value");
  const std::string key = assignment.substr(0, eq);
  long long value = 0;
  try {
    value = std::stoll(assignment.substr(eq + 1));
  } catch (const std::exception&) {
    throw Error("expectation override '" + assignment + "' needs an integer value");
  }
  if (key == "r") e.r = static_cast<int>(value);
  else if (key == "d") e.d = static_cast<int>(value);
  else if (key == "codim") e.codim = static_cast<int>(value);
  else if (key == "degree") e.degree = value;
  else if (key == "t") e.t = static_cast<int>(value);
  else if (key == "reg") e.reg = static_cast<int>(value);
  else if (key == "quadrics") e.quadrics = value;
  else if (key == "secant_cone_dim") e.secant_cone_dim = static_cast<int>(value);
  else if (key.size() > 1 && (key[0] == 'u' || key[0] == 'v')) {
    int i = 0;
    try {
      i = std::stoi(key.substr(1));
    } catch (const std::exception&) {
      throw Error("unknown expectation key '" + key + "'");
    }
    if (i < 1) throw Error("Betti index must be >= 1");
    auto& row = key[0] == 'u' ? e.u : e.v;
    if (static_cast<int>(row.size()) < i) row.resize(static_cast<std::size_t>(i), 0);
    row[static_cast<std::size_t>(i - 1)] = value;
  } else {
    throw Error("unknown expectation key '" + key + "'");
  }
}

bool VerifyResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

VerifyResult verify_fixture(const Fixture& fx, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerifyResult out;
  out.name = fx.name;
  FixtureInput in = build_fixture(fx, opts.prime);

  AnalysisOptions ao;
  ao.window = opts.window;
  ao.seed = opts.seed;
  ao.progress = opts.progress;
  ao.scroll_projection = fx.scroll.has_value() && in.point.has_value();
  ao.non_normal = fx.non_normal;
  out.report = analyze(in.ideal, ao);
  out.checks = out.report.checks;
  for (auto& c : compare_expectation(fx.expect, out.report)) out.checks.push_back(std::move(c));

  if (in.scroll && in.point) {
    const ContainingScroll cs = containing_scroll(*in.scroll, *in.point, true);
    std::ostringstream d;
    std::string n = cs.n_matrix.str();
    std::replace(n.begin(), n.end(), '\n', ' ');
    d << "columns (" << cs.i << ", " << cs.j << "), N = " << n << "dim Y = " << cs.dim_y
      << ", vertex " << cs.vertex_source << " -> " << cs.vertex_y;
    out.checks.push_back({"containing_scroll", cs.ok(), d.str()});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string VerifyResult::to_json() const {
  nlohmann::ordered_json j;
  j["fixture"] = name;
  j["pass"] = pass();
  j["report"] = nlohmann::ordered_json::parse(report.to_json());
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  return j.dump(2);
}

std::string VerifyResult::to_text() const {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  os << "== " << name << ": " << (failed ? "FAIL" : "PASS") << " (" << checks.size() - failed << "/" << checks.size()
     << " checks)\n";
  if (report.betti) os << report.betti->to_text();
  for (const auto& c : checks) os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return os.str();
}

}  // namespace amd
