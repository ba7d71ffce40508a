#include <algorithm>
#include <random>
#include <sstream>

#include "amd/varieties.hpp"

namespace amd {

int ScrollSpec::n() const {
  int s = 0;
  for (int d : degrees) s += d;
  return s + scroll_dim() - 1;
}

int ScrollSpec::nvars() const { return n() + 1 + (vertex + 1); }
int ScrollSpec::dim() const { return scroll_dim() + vertex + 1; }

int ScrollSpec::degree() const {
  int s = 0;
  for (int d : degrees) s += d;
  return s;
}

std::vector<int> ScrollSpec::a() const {
  std::vector<int> out;
  int sum = 0;
  for (int i = 1; i < scroll_dim(); ++i) {
    sum += degrees[i - 1];
    out.push_back(i - 1 + sum);
  }
  return out;
}

std::string ScrollSpec::str() const {
  std::ostringstream os;
  os << "S(";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ")";
  if (vertex >= 0) os << "+vertex:" << vertex;
  return os.str();
}

namespace {

void validate(const ScrollSpec& s) {
  if (s.degrees.empty()) throw Error("scroll: empty degree sequence");
  for (std::size_t i = 0; i < s.degrees.size(); ++i) {
    if (s.degrees[i] < 1) throw Error("scroll: degrees must be positive");
    if (i && s.degrees[i] < s.degrees[i - 1]) throw Error("scroll: degrees must be non-decreasing");
  }
  if (s.n() < 2) throw Error("scroll: S(1) is a line; the smallest supported scroll is S(2)");
  if (s.vertex < -1) throw Error("scroll: vertex dimension must be >= -1");
  if (s.nvars() > kMaxVars) throw Error("scroll: too many variables");
}

std::string strip(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

}  // namespace

ScrollSpec ScrollSpec::parse(const std::string& raw) {
  const std::string text = strip(raw);
  ScrollSpec s;
  if (text.size() < 4 || text.rfind("S(", 0) != 0) throw Error("scroll spec must look like S(d1,...,dl): " + raw);
  const auto close = text.find(')');
  if (close == std::string::npos) throw Error("scroll spec: missing ')': " + raw);
  std::stringstream body(text.substr(2, close - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    try {
      std::size_t used = 0;
      int d = std::stoi(item, &used);
      if (used != item.size()) throw Error("");
      s.degrees.push_back(d);
    } catch (const std::exception&) {
      throw Error("scroll spec: bad degree '" + item + "'");
    }
  }
  std::string rest = text.substr(close + 1);
  if (!rest.empty()) {
    const std::string key = "+vertex:";
    if (rest.rfind(key, 0) != 0) throw Error("scroll spec: unexpected suffix '" + rest + "'");
    try {
      std::size_t used = 0;
      s.vertex = std::stoi(rest.substr(key.size()), &used);
      if (used != rest.size() - key.size()) throw Error("");
    } catch (const std::exception&) {
      throw Error("scroll spec: bad vertex dimension in '" + rest + "'");
    }
  }
  validate(s);
  return s;
}

std::vector<Polynomial> LinearMatrix::minors() const {
  std::vector<Polynomial> out;
  for (int a = 0; a < cols(); ++a)
    for (int b = a + 1; b < cols(); ++b) {
      Polynomial m = entry(0, a) * entry(1, b) - entry(0, b) * entry(1, a);
      if (!m.is_zero()) out.push_back(m);
    }
  return out;
}

std::string LinearMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < 2; ++r) {
    os << "[";
    for (int c = 0; c < cols(); ++c) os << (c ? ", " : " ") << entry(r, c).str();
    os << " ]\n";
  }
  return os.str();
}

namespace {

LinearForm var_form(int n, int v) {
  LinearForm l;
  l.coeffs.assign(static_cast<std::size_t>(n), 0);
  l.coeffs[static_cast<std::size_t>(v)] = 1;
  return l;
}

}  // namespace

Scroll scroll_ideal(const ScrollSpec& spec, std::uint32_t prime) {
  validate(spec);
  const int nv = spec.nvars();
  Scroll out;
  out.spec = spec;
  out.matrix.ring = make_ring(nv, "x", prime);
  out.matrix.rows.resize(2);
  int start = 0;
  for (int d : spec.degrees) {
    for (int s = start; s < start + d; ++s) {
      out.matrix.rows[0].push_back(var_form(nv, s));
      out.matrix.rows[1].push_back(var_form(nv, s + 1));
    }
    start += d + 1;
  }
  for (int v = start; v < nv; ++v) out.vertex_vars.push_back(v);
  out.ideal = GradedIdeal(out.matrix.ring, out.matrix.minors());
  return out;
}

GradedIdeal veronese_ideal(std::uint32_t prime) {
  RingPtr R = make_ring(6, "x", prime);
  const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  auto x = [&](int i) { return Polynomial::variable(R, i); };
  std::vector<Polynomial> minors;
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1)
          minors.push_back(x(idx[r0][c0]) * x(idx[r1][c1]) - x(idx[r0][c1]) * x(idx[r1][c0]));
  return GradedIdeal(R, minimal_generators(minors));
}

GradedIdeal pfaffian_fixture(std::uint32_t prime) {
  RingPtr R = make_ring(10, "x", prime);
  // upper triangle of the skew 5x5 matrix, row by row
  int a[5][5] = {};
  int v = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) a[i][j] = v++;
  auto x = [&](int i, int j) { return Polynomial::variable(R, a[i][j]); };
  std::vector<Polynomial> pf;
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<int> k;
    for (int i = 0; i < 5; ++i)
      if (i != drop) k.push_back(i);
    pf.push_back(x(k[0], k[1]) * x(k[2], k[3]) - x(k[0], k[2]) * x(k[1], k[3]) + x(k[0], k[3]) * x(k[1], k[2]));
  }
  return GradedIdeal(R, pf);
}

Point parse_point(const std::string& raw, int nvars, std::uint32_t prime) {
  const std::string text = strip(raw);
  Point p(static_cast<std::size_t>(nvars), 0);
  if (!text.empty() && text[0] == 'e') {
    int i = -1;
    try {
      std::size_t used = 0;
      i = std::stoi(text.substr(1), &used);
      if (used + 1 != text.size()) i = -1;
    } catch (const std::exception&) {
    }
    if (i < 0 || i >= nvars) throw Error("point: bad coordinate point '" + raw + "'");
    p[static_cast<std::size_t>(i)] = 1;
    return p;
  }
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  Zp f{prime};
  while (std::getline(ss, item, ',')) {
    if (k >= p.size()) throw Error("point: too many coordinates");
    try {
      std::size_t used = 0;
      long long c = std::stoll(item, &used);
      if (used != item.size()) throw Error("");
      p[k++] = f.from_int(c);
    } catch (const std::exception&) {
      throw Error("point: bad coordinate '" + item + "'");
    }
  }
  if (k != p.size()) throw Error("point: expected " + std::to_string(nvars) + " coordinates");
  if (std::all_of(p.begin(), p.end(), [](std::uint32_t c) { return c == 0; })) throw Error("point: zero vector");
  return p;
}

std::string point_str(const Point& p, std::uint32_t prime) {
  Zp f{prime};
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << f.symmetric(p[i]);
  return os.str();
}

Point random_point_off(const GradedIdeal& I, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t prime = I.ring()->prime();
  std::uniform_int_distribution<std::uint32_t> coord(0, prime - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Point p(static_cast<std::size_t>(I.nvars()));
    for (auto& c : p) c = coord(rng);
    if (std::all_of(p.begin(), p.end(), [](std::uint32_t c) { return c == 0; })) continue;
    for (const auto& g : I.generators())
      if (g.evaluate(p) != 0) return p;
  }
  throw Error("random_point_off: could not find a point off the variety");
}

}  // namespace amd
