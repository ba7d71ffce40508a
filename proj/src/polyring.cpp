#include "amd/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "amd/linalg.hpp"

namespace amd {

std::uint32_t Zp::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Zp::inv(std::uint32_t a) const {
  if (a == 0) throw Error("division by zero in F_p");
  // extended Euclid
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- monomials

Monomial Monomial::var(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw Error("variable index out of range");
  if (power < 0 || power > 255) throw Error("exponent out of range");
  Monomial m;
  m.e[i] = static_cast<std::uint8_t>(power);
  m.deg = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw Error("too many variables");
  Monomial m;
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw Error("exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    d += exps[i];
  }
  if (d > 255) throw Error("monomial degree overflow");
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

std::vector<int> Monomial::exponents(int n) const { return std::vector<int>(e.begin(), e.begin() + n); }

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < kMaxVars; ++i) {
    h ^= e[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.deg + b.deg > 255) throw Error("monomial degree overflow");
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    if (b.e[i] > a.e[i]) throw Error("monomial division not exact");
    m.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  }
  m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    d += m.e[i];
  }
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::min(a.e[i], b.e[i]);
    d += m.e[i];
  }
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// ---------------------------------------------------------------- orders

namespace {

int revlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

int range_degree(const Monomial& a, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += a.e[i];
  return d;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
  if (order.kind == TermOrder::Kind::DegRevLex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    return revlex_range(a, b, 0, kMaxVars);
  }
  int da = range_degree(a, 0, order.front), db = range_degree(b, 0, order.front);
  if (da != db) return da > db ? 1 : -1;
  int c = revlex_range(a, b, 0, order.front);
  if (c) return c;
  da = a.deg - da;
  db = b.deg - db;
  if (da != db) return da > db ? 1 : -1;
  return revlex_range(a, b, order.front, kMaxVars);
}

std::string TermOrder::name() const {
  if (kind == Kind::DegRevLex) return "degrevlex";
  return "block:" + std::to_string(front);
}

TermOrder TermOrder::parse(const std::string& s) {
  if (s == "degrevlex" || s == "grevlex") return degrevlex();
  if (s.rfind("block:", 0) == 0) {
    int k = std::stoi(s.substr(6));
    if (k < 0) throw Error("bad block size");
    return block(k);
  }
  throw Error("unknown term order '" + s + "'");
}

// ---------------------------------------------------------------- rings

Ring::Ring(std::vector<std::string> names, std::uint32_t prime, TermOrder order)
    : names_(std::move(names)), order_(order) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) throw Error("at most 24 variables supported");
  if (prime <= 2 || prime >= (1u << 31) || !is_prime(prime)) throw Error("modulus must be a prime in (2, 2^31)");
  field_.p = prime;
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  if (order_.kind == TermOrder::Kind::Block && (order_.front < 0 || order_.front > nvars()))
    throw Error("block split out of range");
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

RingPtr make_ring(int nvars, const std::string& prefix, std::uint32_t prime, TermOrder order) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i));
  return std::make_shared<const Ring>(std::move(names), prime, order);
}

RingPtr make_ring(std::vector<std::string> names, std::uint32_t prime, TermOrder order) {
  return std::make_shared<const Ring>(std::move(names), prime, order);
}

RingPtr with_order(const RingPtr& r, TermOrder order) {
  return std::make_shared<const Ring>(r->names(), r->prime(), order);
}

// ---------------------------------------------------------------- polynomials

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, bool canon) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (canon) canonicalize();
}

void Polynomial::canonicalize() {
  const Zp& f = ring_->field();
  for (auto& t : terms_) t.c %= f.p;
  const TermOrder& o = ring_->order();
  std::stable_sort(terms_.begin(), terms_.end(),
                   [&](const Term& a, const Term& b) { return compare(a.m, b.m, o) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = f.add(out.back().c, t.c);
    else
      out.push_back(t);
    if (out.back().c == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  std::uint32_t v = ring->field().from_int(c);
  Polynomial p(ring);
  if (v) p.terms_.push_back({Monomial{}, v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw Error("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::var(i), 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t c) {
  Polynomial p(ring);
  c %= ring->prime();
  if (c) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

static void check_same(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring()) throw Error("polynomial without ring");
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) throw Error("ring mismatch");
}

void add_scaled_shifted(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                        std::uint32_t c, const Monomial& m, const Zp& f, const TermOrder& order) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = shift ? b[j].m * m : b[j].m;
    if (i == a.size()) {
      std::uint32_t v = f.mul(b[j].c, c);
      if (v) out.push_back({bm, v});
      ++j;
      continue;
    }
    int cmp = compare(a[i].m, bm, order);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      std::uint32_t v = f.mul(b[j].c, c);
      if (v) out.push_back({bm, v});
      ++j;
    } else {
      std::uint32_t v = f.add(a[i].c, f.mul(b[j].c, c));
      if (v) out.push_back({bm, v});
      ++i;
      ++j;
    }
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(*this, o);
  Polynomial r(ring_);
  add_scaled_shifted(r.terms_, terms_, o.terms_, 1, Monomial{}, ring_->field(), ring_->order());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(*this, o);
  Polynomial r(ring_);
  add_scaled_shifted(r.terms_, terms_, o.terms_, ring_->prime() - 1, Monomial{}, ring_->field(), ring_->order());
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->prime() - 1); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  Polynomial r(ring_);
  c %= ring_->prime();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ring_->field().mul(t.c, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, std::uint32_t c) const {
  Polynomial r(ring_);
  c %= ring_->prime();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, ring_->field().mul(t.c, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(*this, o);
  const Zp& f = ring_->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.m * b.m];
      slot = f.add(slot, f.mul(a.c, b.c));
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) ts.push_back({m, c});
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().c));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

std::uint32_t Polynomial::evaluate(const std::vector<std::uint32_t>& pt) const {
  const Zp& f = ring_->field();
  if (static_cast<int>(pt.size()) != ring_->nvars()) throw Error("evaluate: point has wrong length");
  std::uint32_t s = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.c;
    for (int i = 0; i < ring_->nvars(); ++i)
      if (t.m.e[i]) v = f.mul(v, f.pow(pt[i] % f.p, t.m.e[i]));
    s = f.add(s, v);
  }
  return s;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars() || target->prime() != ring_->prime())
    throw Error("in_ring: incompatible rings");
  return Polynomial(target, terms_);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const Zp& f = ring_->field();
  bool first = true;
  for (const auto& t : terms_) {
    long long c = f.symmetric(t.c);
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.m.is_one()) {
      os << c;
      need_star = true;
    }
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (need_star) os << '*';
      os << ring_->name(i);
      if (t.m.e[i] > 1) os << '^' << int(t.m.e[i]);
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- linear forms

bool LinearForm::is_zero() const {
  for (auto c : coeffs)
    if (c) return false;
  return true;
}

Polynomial LinearForm::to_poly(const RingPtr& ring) const {
  if (static_cast<int>(coeffs.size()) != ring->nvars()) throw Error("linear form length mismatch");
  std::vector<Term> ts;
  for (int i = 0; i < ring->nvars(); ++i)
    if (coeffs[i] % ring->prime()) ts.push_back({Monomial::var(i), coeffs[i] % ring->prime()});
  return Polynomial(ring, std::move(ts));
}

LinearForm LinearForm::from_poly(const Polynomial& f) {
  LinearForm l;
  l.coeffs.assign(f.ring()->nvars(), 0);
  for (const auto& t : f.terms()) {
    if (t.m.deg != 1) throw Error("not a linear form");
    for (int i = 0; i < f.ring()->nvars(); ++i)
      if (t.m.e[i]) l.coeffs[i] = t.c;
  }
  return l;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& forms, const RingPtr& target) {
  const int n = f.ring()->nvars();
  if (static_cast<int>(forms.size()) != n) throw Error("substitute: wrong number of forms");
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * forms[i]);
    return pw[e];
  };
  const Zp& fld = target->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, 1).scaled(t.c);
    for (int i = 0; i < n; ++i)
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    for (const auto& s : prod.terms()) {
      auto& slot = acc[s.m];
      slot = fld.add(slot, s.c);
    }
  }
  std::vector<Term> ts;
  for (const auto& [m, c] : acc)
    if (c) ts.push_back({m, c});
  return Polynomial(target, std::move(ts));
}

Polynomial apply_linear_change(const Polynomial& f, const Matrix& M) {
  const RingPtr& R = f.ring();
  const int n = R->nvars();
  if (static_cast<int>(M.size()) != n) throw Error("apply_linear_change: matrix size mismatch");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n) throw Error("apply_linear_change: matrix not square");
  if (determinant(M, R->field()) == 0) throw Error("apply_linear_change: singular matrix");
  std::vector<Polynomial> forms;
  for (int i = 0; i < n; ++i) forms.push_back(LinearForm{M[i]}.to_poly(R));
  return substitute(f, forms, R);
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  const RingPtr& ring;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("parse error at position " + std::to_string(pos) + ": " + what + " in '" + s + "'");
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  unsigned long long number() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    std::string digits = s.substr(start, pos - start);
    unsigned long long v = 0;
    for (char ch : digits) v = (v * 10 + static_cast<unsigned>(ch - '0')) % ring->prime();
    return v;
  }
  // factor := integer | identifier ('^' integer)?
  Term factor() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char ch = s[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) return {Monomial{}, static_cast<std::uint32_t>(number())};
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = ring->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      int e = 1;
      if (peek('^')) {
        ++pos;
        skip();
        std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) fail("expected exponent");
        e = std::stoi(s.substr(st, pos - st));
      }
      return {Monomial::var(idx, e), 1};
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
  Term term() {
    Term t = factor();
    while (peek('*')) {
      ++pos;
      Term u = factor();
      t.m = t.m * u.m;
      t.c = ring->field().mul(t.c, u.c);
    }
    return t;
  }
  Polynomial expr() {
    std::vector<Term> ts;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos;
    } else if (peek('+')) {
      ++pos;
    }
    for (;;) {
      Term t = term();
      if (neg) t.c = ring->field().neg(t.c);
      ts.push_back(t);
      if (peek('+')) {
        ++pos;
        neg = false;
      } else if (peek('-')) {
        ++pos;
        neg = true;
      } else {
        break;
      }
    }
    skip();
    if (pos != s.size()) fail("trailing input");
    return Polynomial(ring, std::move(ts));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Parser p{text, ring};
  return p.expr();
}

}  // namespace amd
