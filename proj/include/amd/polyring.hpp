#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amd {

constexpr int kMaxVars = 24;
constexpr std::uint32_t kDefaultPrime = 32003;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic in F_p, 2 < p < 2^31.
struct Zp {
  std::uint32_t p = kDefaultPrime;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  // representative in (-p/2, p/2]
  long long symmetric(std::uint32_t a) const { return a > p / 2 ? static_cast<long long>(a) - p : a; }
};

bool is_prime(std::uint64_t n);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial var(int i, int power = 1);
  static Monomial from_exponents(const std::vector<int>& exps);
  std::vector<int> exponents(int n) const;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool is_one() const { return deg == 0; }
  std::size_t hash() const;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial operator/(const Monomial& a, const Monomial& b);  // requires b | a
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Degrevlex, or a block elimination order [front | back] with degrevlex inside each block.
struct TermOrder {
  enum class Kind { DegRevLex, Block };
  Kind kind = Kind::DegRevLex;
  int front = 0;

  static TermOrder degrevlex() { return {}; }
  static TermOrder block(int front_vars) { return {Kind::Block, front_vars}; }
  bool operator==(const TermOrder& o) const {
    return kind == o.kind && (kind == Kind::DegRevLex || front == o.front);
  }
  std::string name() const;
  static TermOrder parse(const std::string& s);
};

// -1, 0, +1
int compare(const Monomial& a, const Monomial& b, const TermOrder& order);

class Ring {
 public:
  Ring(std::vector<std::string> names, std::uint32_t prime = kDefaultPrime, TermOrder order = {});

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;  // -1 if absent
  std::uint32_t prime() const { return field_.p; }
  const Zp& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }

  bool same_as(const Ring& o) const {
    return names_ == o.names_ && field_.p == o.field_.p && order_ == o.order_;
  }

 private:
  std::vector<std::string> names_;
  Zp field_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int nvars, const std::string& prefix = "x", std::uint32_t prime = kDefaultPrime,
                  TermOrder order = {});
RingPtr make_ring(std::vector<std::string> names, std::uint32_t prime = kDefaultPrime, TermOrder order = {});
RingPtr with_order(const RingPtr& r, TermOrder order);

struct Term {
  Monomial m;
  std::uint32_t c = 0;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms, bool canonicalize = true);

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  int degree() const;  // total degree of the leading term's degree max; -1 for zero
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial mul_term(const Monomial& m, std::uint32_t c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // evaluate at a point with coordinates in F_p
  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;
  // re-express in another ring with the same variables (e.g. different order)
  Polynomial in_ring(const RingPtr& target) const;

  std::string str() const;

 private:
  void canonicalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Low-level helpers on sorted term vectors.
// r = a + c*m*b, all sorted descending in `order`.
void add_scaled_shifted(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                        std::uint32_t c, const Monomial& m, const Zp& f, const TermOrder& order);

struct LinearForm {
  std::vector<std::uint32_t> coeffs;
  bool is_zero() const;
  Polynomial to_poly(const RingPtr& ring) const;
  static LinearForm from_poly(const Polynomial& f);
};

using Matrix = std::vector<std::vector<std::uint32_t>>;

// x_i -> sum_j M[i][j] x_j
Polynomial apply_linear_change(const Polynomial& f, const Matrix& M);
// x_i -> forms[i], forms in the target ring; no invertibility requirement
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& forms, const RingPtr& target);

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace amd
