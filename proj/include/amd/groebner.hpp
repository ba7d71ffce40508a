#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "amd/polyring.hpp"

namespace amd {

// ---------------------------------------------------------------- module terms

struct ModTerm {
  Monomial m;
  std::uint32_t comp = 0;
  std::uint32_t c = 0;
};

// Sparse vector in a twisted free module, terms sorted descending in the module order.
using SVec = std::vector<ModTerm>;

// Term-over-position order: (degree + twist), then the ring order, then lower component first.
// With `front > 0`, every term in components [0, front) dominates terms in later components.
struct ModuleOrder {
  std::vector<int> twists;  // degree of each basis column
  int front = 0;
};

struct ModuleContext {
  RingPtr ring;
  ModuleOrder order;

  int rank() const { return static_cast<int>(order.twists.size()); }
  int degree(const ModTerm& t) const { return t.m.deg + order.twists[t.comp]; }
  int cmp(const ModTerm& a, const ModTerm& b) const;
};

// Reduced GB of the submodule generated by `gens` (homogeneous).  Output sorted by lead, monic.
std::vector<SVec> module_groebner(const std::vector<SVec>& gens, const ModuleContext& ctx);
// Remainder of f modulo a GB (all terms reduced).
SVec module_normal_form(const SVec& f, const std::vector<SVec>& gb, const ModuleContext& ctx);
// S-vector of two GB elements (zero if leads lie in different components)
SVec s_vector(const SVec& a, const SVec& b, const ModuleContext& ctx);
void sort_terms(SVec& v, const ModuleContext& ctx);

// ---------------------------------------------------------------- user-facing types

struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;
  int rank() const { return static_cast<int>(twists.size()); }
};

struct FreeModuleElement {
  std::vector<Polynomial> entries;  // one per column
  bool is_zero() const;
  int degree(const FreeModule& F) const;  // -1 for zero; throws if inhomogeneous
};

SVec to_svec(const FreeModuleElement& v, const ModuleContext& ctx);
FreeModuleElement from_svec(const SVec& v, const FreeModule& F);

struct GroebnerBasis {
  RingPtr ring;  // carries the order used
  std::vector<Polynomial> elements;
};

class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  int nvars() const { return ring_->nvars(); }

  // cached reduced GB for the given order (defaults to the ring's own order)
  const GroebnerBasis& gb() const { return gb(ring_->order()); }
  const GroebnerBasis& gb(const TermOrder& order) const;

  bool contains(const Polynomial& f) const;
  bool is_zero() const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<GroebnerBasis>> by_order;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

class GradedSubmodule {
 public:
  GradedSubmodule() = default;
  GradedSubmodule(FreeModule ambient, std::vector<FreeModuleElement> gens);
  const FreeModule& ambient() const { return ambient_; }
  const std::vector<FreeModuleElement>& generators() const { return gens_; }
  // reduced GB in the term-over-position order
  const std::vector<SVec>& gb() const;
  ModuleContext context() const { return {ambient_.ring, {ambient_.twists, 0}}; }

 private:
  FreeModule ambient_;
  std::vector<FreeModuleElement> gens_;
  mutable std::shared_ptr<std::vector<SVec>> gb_;
};

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order);
GroebnerBasis groebner_basis(const GradedIdeal& I, const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool same_ideal(const GradedIdeal& a, const GradedIdeal& b);

// Reduces f with an explicitly chosen sequence of reducers; used to test confluence.
Polynomial normal_form_random_path(const Polynomial& f, const GroebnerBasis& gb, std::uint64_t seed);
// True iff every S-pair of gb reduces to 0.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

// Intersection with the subring of the variables not in `front_vars`; result lives in a ring
// over the remaining variables (in their original order).
GradedIdeal eliminate(const GradedIdeal& I, const std::vector<int>& front_vars);

GradedIdeal ideal_quotient(const GradedIdeal& I, const GradedIdeal& J);
GradedIdeal quotient_by(const GradedIdeal& I, const Polynomial& g);
GradedIdeal saturate(const GradedIdeal& I, const Polynomial& f);
GradedIdeal intersect(const GradedIdeal& I, const GradedIdeal& J);
// (I : m^infinity) via a seeded random linear form moved to the last variable.
GradedIdeal saturate_irrelevant(const GradedIdeal& I, std::uint64_t seed);

// First syzygy module of the generators (minimal generating set).
GradedSubmodule syzygies(const GradedSubmodule& M);
GradedSubmodule syzygies(const std::vector<Polynomial>& gens);

// Minimal homogeneous generators of an ideal, chosen among the given ones.
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens);

}  // namespace amd
