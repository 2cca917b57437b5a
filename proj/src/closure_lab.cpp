#include "dgcd/closure_lab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dgcd/factor.hpp"
#include "dgcd/gcd.hpp"
#include "dgcd/parse.hpp"

namespace dgcd {

using Exps = std::vector<unsigned>;

// ---------------------------------------------------------------------------
// Factor base and factored elements

FactorBase::FactorBase(RingPtr ring, std::vector<Polynomial> primes) : ring_(std::move(ring)) {
  if (primes.empty()) throw Error("factor base is empty");
  std::vector<Polynomial> normalized;
  for (auto& p : primes) {
    if (!same_ring(p.ring(), ring_)) throw RingMismatch("factor base element from another ring");
    if (p.is_constant()) throw Error("factor base element is constant: " + print_polynomial(p));
    if (is_irreducible(p).reducible()) throw Error("factor base element is reducible: " + print_polynomial(p));
    Polynomial n = normalize_associate(p);
    if (std::find(normalized.begin(), normalized.end(), n) != normalized.end())
      throw Error("factor base elements are associated: " + print_polynomial(p));
    normalized.push_back(std::move(n));
  }
  primes_ = std::move(primes);
}

FactorBase FactorBase::variables(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->arity(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return FactorBase(ring, std::move(vars));
}

unsigned FactoredElement::total() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

Polynomial FactoredElement::expand(const FactorBase& base) const {
  if (exponents.size() != base.size()) throw Error("factored element does not match the factor base");
  Polynomial p = Polynomial::constant(base.ring(), unit);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i]) p *= base.primes()[i].pow(exponents[i]);
  }
  return p;
}

std::optional<FactoredElement> factor_over_base(const Polynomial& p, const FactorBase& base) {
  if (p.is_zero()) return std::nullopt;
  FactoredElement f{1, Exps(base.size(), 0)};
  Polynomial rest = p;
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (!rest.is_constant()) {
      auto q = exact_quotient(rest, base.primes()[i]);
      if (!q) break;
      rest = std::move(*q);
      ++f.exponents[i];
    }
  }
  if (!rest.is_constant()) return std::nullopt;
  f.unit = rest.constant_term();
  return f;
}

// ---------------------------------------------------------------------------
// Subrings

SubringSpec SubringSpec::ambient(RingPtr ring) { return SubringSpec(Kind::AmbientRing, std::move(ring), {}); }

SubringSpec SubringSpec::monomial_semigroup(RingPtr ring, std::vector<Exps> generators) {
  if (generators.empty()) throw Error("monomial subring needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != ring->arity()) throw Error("generator arity does not match the ambient ring");
    if (std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; }))
      throw Error("zero generator: units of the subring would differ");
  }
  return SubringSpec(Kind::MonomialSemigroup, std::move(ring), std::move(generators));
}

SubringSpec SubringSpec::from_monomials(RingPtr ring, const std::vector<Polynomial>& generators) {
  std::vector<Exps> gens;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("generator from another ring");
    if (!g.is_monomial() || g.is_constant()) throw Error("generator must be a non-constant monomial: " + print_polynomial(g));
    auto e = g.leading_monomial().exponents();
    gens.emplace_back(e.begin(), e.end());
  }
  return monomial_semigroup(std::move(ring), std::move(gens));
}

std::string SubringSpec::describe() const {
  std::ostringstream out;
  out << "k[";
  const auto& names = ring_->variable_names();
  if (kind_ == Kind::AmbientRing) {
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
    out << "]";
    return out.str();
  }
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    std::vector<Monomial::Exponent> e(generators_[g].begin(), generators_[g].end());
    out << (g ? ", " : "") << print_polynomial(Polynomial::monomial(ring_, Monomial(std::move(e))));
  }
  out << "] in k[";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
  out << "]";
  return out.str();
}

namespace {

// Memoized DFS: v is in the semigroup iff v = 0 or v - g is for some g <= v.
class Semigroup {
 public:
  explicit Semigroup(const std::vector<Exps>& gens) : gens_(gens) {}

  bool contains(const Exps& v) {
    if (std::all_of(v.begin(), v.end(), [](unsigned e) { return e == 0; })) return true;
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      bool fits = true;
      for (std::size_t i = 0; i < v.size() && fits; ++i) fits = g[i] <= v[i];
      if (!fits) continue;
      Exps rest = v;
      for (std::size_t i = 0; i < v.size(); ++i) rest[i] -= g[i];
      if (contains(rest)) {
        found = true;
        break;
      }
    }
    memo_.emplace(v, found);
    return found;
  }

 private:
  const std::vector<Exps>& gens_;
  std::map<Exps, bool> memo_;
};

bool contains_poly(const SubringSpec& r, Semigroup& sg, const Polynomial& p) {
  if (r.kind() == SubringSpec::Kind::AmbientRing) return true;
  for (const auto& t : p.terms()) {
    auto e = t.monomial.exponents();
    if (!sg.contains(Exps(e.begin(), e.end()))) return false;
  }
  return true;
}

Exps sub(const Exps& a, const Exps& b) {
  Exps r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Exps scale(const Exps& a, unsigned k) {
  Exps r = a;
  for (auto& e : r) e *= k;
  return r;
}

unsigned sum(const Exps& a) { return std::accumulate(a.begin(), a.end(), 0u); }

// Exponent vectors of a given length with sum <= bound, by sum then with the
// first coordinate largest first.
std::vector<Exps> vectors_up_to(std::size_t len, unsigned bound) {
  std::vector<Exps> out;
  for (unsigned total = 0; total <= bound; ++total) {
    Exps cur(len, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == len) {
        cur[i] = left;
        out.push_back(cur);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        cur[i] = e;
        self(self, i + 1, left - e);
      }
    };
    rec(rec, 0, total);
  }
  return out;
}

// All c with 0 <= c <= e, in the same order as vectors_up_to.
std::vector<Exps> sub_vectors(const Exps& e) {
  std::vector<Exps> out;
  Exps cur(e.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == e.size()) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= e[i]; ++k) {
      cur[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const Exps& a, const Exps& b) {
    unsigned sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return a > b;
  });
  return out;
}

// Membership of unit * prod(prime^e) with results cached by exponent vector.
class Lab {
 public:
  Lab(const SubringSpec& r, const FactorBase& base) : r_(r), base_(base), sg_(r.generators()) {
    if (!same_ring(r.ring(), base.ring())) throw RingMismatch("factor base and subring use different rings");
  }

  bool in_r(const Exps& e) {
    if (r_.kind() == SubringSpec::Kind::AmbientRing) return true;
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    bool v = contains_poly(r_, sg_, element(e).expand(base_));
    cache_.emplace(e, v);
    return v;
  }

  FactoredElement element(const Exps& e) const { return FactoredElement{1, e}; }

  bool irreducible_in_r(const Exps& e) {
    for (const auto& c : sub_vectors(e)) {
      unsigned s = sum(c);
      if (s == 0 || s == sum(e)) continue;
      if (in_r(c) && in_r(sub(e, c))) return false;
    }
    return true;
  }

  bool squarefree_in_r(const Exps& e) {
    for (const auto& c : sub_vectors(e)) {
      if (sum(c) == 0) continue;
      Exps twice = scale(c, 2);
      bool fits = true;
      for (std::size_t i = 0; i < e.size() && fits; ++i) fits = twice[i] <= e[i];
      if (fits && in_r(c) && in_r(sub(e, twice))) return false;
    }
    return true;
  }

  std::vector<Exps> members_up_to(unsigned bound) {
    std::vector<Exps> out;
    for (auto& v : vectors_up_to(base_.size(), bound)) {
      if (in_r(v)) out.push_back(std::move(v));
    }
    return out;
  }

  std::size_t width() const { return base_.size(); }

 private:
  const SubringSpec& r_;
  const FactorBase& base_;
  Semigroup sg_;
  std::map<Exps, bool> cache_;
};

const Exps& checked_exponents(const FactoredElement& a, const FactorBase& base) {
  if (a.exponents.size() != base.size()) throw Error("factored element does not match the factor base");
  if (a.unit == 0) throw Error("factored element has a zero unit");
  return a.exponents;
}

bool all_at_most_one(const Exps& e) {
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k <= 1; });
}

ClosureVerdict fails(ClosureProperty p, unsigned bound, std::vector<Exps> elems, unsigned power = 0) {
  ClosureVerdict v{p, false, bound, {}, power};
  for (auto& e : elems) v.witness.push_back(FactoredElement{1, std::move(e)});
  return v;
}

ClosureVerdict finish(const SubringSpec& r, ClosureVerdict v, const FactorBase& base) {
  if (!v.holds && !reverify_witness(r, v, base))
    throw std::logic_error("closure witness failed re-verification: " + to_string(v.property));
  return v;
}

}  // namespace

bool semigroup_contains(const std::vector<Exps>& generators, const Exps& v) {
  for (const auto& g : generators) {
    if (g.size() != v.size()) throw Error("generator arity does not match the vector");
    if (std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; })) throw Error("zero generator");
  }
  Semigroup sg(generators);
  return sg.contains(v);
}

bool subring_contains(const SubringSpec& r, const Polynomial& p) {
  if (!same_ring(r.ring(), p.ring())) throw RingMismatch("polynomial is not in the ambient ring");
  Semigroup sg(r.generators());
  return contains_poly(r, sg, p);
}

bool units_equal(const SubringSpec& r) {
  if (r.kind() == SubringSpec::Kind::AmbientRing) return true;
  return std::none_of(r.generators().begin(), r.generators().end(), [](const Exps& g) {
    return std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; });
  });
}

std::vector<FactoredElement> enumerate_elements(const FactorBase& base, unsigned bound, const SubringSpec* r) {
  std::optional<Lab> lab;
  if (r) lab.emplace(*r, base);
  std::vector<FactoredElement> out;
  for (auto& v : vectors_up_to(base.size(), bound)) {
    if (lab && !lab->in_r(v)) continue;
    out.push_back(FactoredElement{1, v});
    out.push_back(FactoredElement{-1, std::move(v)});
  }
  return out;
}

bool is_irreducible_in_R(const SubringSpec& r, const FactoredElement& a, const FactorBase& base) {
  const Exps& e = checked_exponents(a, base);
  Lab lab(r, base);
  if (sum(e) == 0) throw Error("units are neither irreducible nor reducible");
  if (!lab.in_r(e)) throw Error("element is not in the subring");
  return lab.irreducible_in_r(e);
}

bool is_squarefree_in_R(const SubringSpec& r, const FactoredElement& a, const FactorBase& base) {
  const Exps& e = checked_exponents(a, base);
  Lab lab(r, base);
  if (!lab.in_r(e)) throw Error("element is not in the subring");
  return lab.squarefree_in_r(e);
}

std::string to_string(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::IrrRSubIrrA: return "irr_R_sub_irr_A";
    case ClosureProperty::SqfRSubSqfA: return "sqf_R_sub_sqf_A";
    case ClosureProperty::IrrRSubSqfA: return "irr_R_sub_sqf_A";
    case ClosureProperty::FactoriallyClosed: return "factorially_closed";
    case ClosureProperty::SquareFactoriallyClosed: return "square_factorially_closed";
    case ClosureProperty::RootClosed: return "root_closed";
    case ClosureProperty::Saturation: return "saturation";
  }
  return "?";
}

ClosureProperty parse_closure_property(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ClosureProperty::Saturation); ++i) {
    auto p = static_cast<ClosureProperty>(i);
    if (to_string(p) == s) return p;
  }
  throw Error("unknown closure property: " + s);
}

ClosureVerdict check_containment(const SubringSpec& r, ClosureProperty property, unsigned bound,
                                 const FactorBase& base) {
  if (property != ClosureProperty::IrrRSubIrrA && property != ClosureProperty::SqfRSubSqfA &&
      property != ClosureProperty::IrrRSubSqfA)
    throw Error("not a containment property: " + to_string(property));
  Lab lab(r, base);
  for (auto& a : lab.members_up_to(bound)) {
    unsigned s = sum(a);
    bool bad = false;
    switch (property) {
      case ClosureProperty::IrrRSubIrrA: bad = s >= 2 && lab.irreducible_in_r(a); break;
      case ClosureProperty::SqfRSubSqfA: bad = !all_at_most_one(a) && lab.squarefree_in_r(a); break;
      default: bad = s >= 1 && !all_at_most_one(a) && lab.irreducible_in_r(a); break;
    }
    if (bad) return finish(r, fails(property, bound, {a}), base);
  }
  return {property, true, bound, {}, 0};
}

ClosureVerdict check_factorially_closed(const SubringSpec& r, unsigned bound, const FactorBase& base) {
  Lab lab(r, base);
  for (const auto& z : lab.members_up_to(bound)) {
    for (auto& x : sub_vectors(z)) {
      Exps y = sub(z, x);
      if (!lab.in_r(x) || !lab.in_r(y))
        return finish(r, fails(ClosureProperty::FactoriallyClosed, bound, {x, y}), base);
    }
  }
  return {ClosureProperty::FactoriallyClosed, true, bound, {}, 0};
}

// For y square-free in A, x^2*y = z pins x = floor(z/2) and y = z mod 2.
ClosureVerdict check_square_factorially_closed(const SubringSpec& r, unsigned bound, const FactorBase& base) {
  Lab lab(r, base);
  for (const auto& z : lab.members_up_to(bound)) {
    Exps x = z, y = z;
    for (std::size_t i = 0; i < z.size(); ++i) {
      x[i] = z[i] / 2;
      y[i] = z[i] % 2;
    }
    if (!lab.in_r(x) || !lab.in_r(y))
      return finish(r, fails(ClosureProperty::SquareFactoriallyClosed, bound, {x, y}), base);
  }
  return {ClosureProperty::SquareFactoriallyClosed, true, bound, {}, 0};
}

ClosureVerdict check_root_closed(const SubringSpec& r, unsigned bound, unsigned max_power, const FactorBase& base) {
  if (max_power < 2) throw Error("max_power must be at least 2");
  Lab lab(r, base);
  for (auto& x : vectors_up_to(base.size(), bound)) {
    if (lab.in_r(x)) continue;
    for (unsigned n = 2; n <= max_power; ++n) {
      if (lab.in_r(scale(x, n))) return finish(r, fails(ClosureProperty::RootClosed, bound, {x}, n), base);
    }
  }
  return {ClosureProperty::RootClosed, true, bound, {}, 0};
}

// Pairs with xy in R and |xy| <= bound.
ClosureVerdict check_saturation(const SubringSpec& r, unsigned bound, const FactorBase& base) {
  Lab lab(r, base);
  for (const auto& z : lab.members_up_to(bound)) {
    for (auto& x : sub_vectors(z)) {
      if (!lab.in_r(x)) continue;
      Exps y = sub(z, x);
      if (!lab.in_r(y)) return finish(r, fails(ClosureProperty::Saturation, bound, {x, y}), base);
    }
  }
  return {ClosureProperty::Saturation, true, bound, {}, 0};
}

bool reverify_witness(const SubringSpec& r, const ClosureVerdict& v, const FactorBase& base) {
  if (v.holds) return true;
  auto in = [&](const Polynomial& p) { return subring_contains(r, p); };
  auto expect = [&](std::size_t k) {
    if (v.witness.size() != k) throw Error("closure witness has the wrong number of elements");
  };
  switch (v.property) {
    case ClosureProperty::IrrRSubIrrA:
    case ClosureProperty::IrrRSubSqfA:
    case ClosureProperty::SqfRSubSqfA: {
      expect(1);
      const auto& a = v.witness[0];
      Polynomial p = a.expand(base);
      if (!in(p) || p.is_constant()) return false;
      if (v.property == ClosureProperty::SqfRSubSqfA) {
        return is_squarefree_in_R(r, a, base) && !is_squarefree(p);
      }
      if (!is_irreducible_in_R(r, a, base)) return false;
      if (v.property == ClosureProperty::IrrRSubSqfA) return !is_squarefree(p);
      // reducible in A: split off one prime and check the product by division
      std::size_t i = 0;
      while (a.exponents[i] == 0) ++i;
      const Polynomial& q = base.primes()[i];
      auto rest = exact_quotient(p, q);
      return rest && !rest->is_constant() && !is_irreducible(p).irreducible();
    }
    case ClosureProperty::FactoriallyClosed: {
      expect(2);
      Polynomial x = v.witness[0].expand(base), y = v.witness[1].expand(base);
      Polynomial xy = x * y;
      return !xy.is_zero() && in(xy) && !(in(x) && in(y));
    }
    case ClosureProperty::SquareFactoriallyClosed: {
      expect(2);
      Polynomial x = v.witness[0].expand(base), y = v.witness[1].expand(base);
      Polynomial z = x * x * y;
      return !z.is_zero() && (y.is_constant() || is_squarefree(y)) && in(z) && !(in(x) && in(y));
    }
    case ClosureProperty::RootClosed: {
      expect(1);
      if (v.power < 2) return false;
      Polynomial x = v.witness[0].expand(base);
      return in(x.pow(v.power)) && !in(x);
    }
    case ClosureProperty::Saturation: {
      expect(2);
      Polynomial x = v.witness[0].expand(base), y = v.witness[1].expand(base);
      Polynomial xy = x * y;
      return !xy.is_zero() && in(x) && in(xy) && !in(y);
    }
  }
  return false;
}

const ClosureVerdict& ClosureReport::verdict(ClosureProperty p) const {
  auto i = static_cast<std::size_t>(p);
  if (i >= verdicts.size()) throw Error("closure report has no verdict for " + to_string(p));
  return verdicts[i];
}

ClosureReport audit_implications(const SubringSpec& r, unsigned bound, unsigned max_power, const FactorBase& base) {
  ClosureReport rep;
  rep.ambient_variables = r.ring()->variable_names();
  rep.generators = r.generators();
  rep.base = base.primes();
  rep.bound = bound;
  rep.max_power = max_power;
  rep.units_equal = units_equal(r);

  rep.verdicts = {
      check_containment(r, ClosureProperty::IrrRSubIrrA, bound, base),
      check_containment(r, ClosureProperty::SqfRSubSqfA, bound, base),
      check_containment(r, ClosureProperty::IrrRSubSqfA, bound, base),
      check_factorially_closed(r, bound, base),
      check_square_factorially_closed(r, bound, base),
      check_root_closed(r, bound, max_power, base),
      check_saturation(r, bound, base),
  };

  auto total = [](const FactoredElement& e) { return e.total(); };
  auto conclude = [&](ClosureProperty premise, ClosureProperty conclusion, unsigned budget) {
    std::string rule = "fail(" + to_string(premise) + ") => fail(" + to_string(conclusion) + ")";
    rep.rules_checked.push_back(rule);
    ClosureVerdict v = conclusion == ClosureProperty::FactoriallyClosed
                           ? check_factorially_closed(r, budget, base)
                       : conclusion == ClosureProperty::SquareFactoriallyClosed
                           ? check_square_factorially_closed(r, budget, base)
                           : check_containment(r, conclusion, budget, base);
    if (v.holds) rep.findings.push_back({rule, "no failure within budget " + std::to_string(budget)});
  };
  auto saturated = [&](unsigned budget) { return rep.units_equal && check_saturation(r, budget, base).holds; };

  const auto& irr_irr = rep.verdict(ClosureProperty::IrrRSubIrrA);
  const auto& sqf_sqf = rep.verdict(ClosureProperty::SqfRSubSqfA);
  const auto& irr_sqf = rep.verdict(ClosureProperty::IrrRSubSqfA);
  const auto& fc = rep.verdict(ClosureProperty::FactoriallyClosed);
  const auto& sfc = rep.verdict(ClosureProperty::SquareFactoriallyClosed);
  const auto& root = rep.verdict(ClosureProperty::RootClosed);

  if (!irr_sqf.holds) conclude(ClosureProperty::IrrRSubSqfA, ClosureProperty::SqfRSubSqfA, total(irr_sqf.witness[0]));
  if (!sqf_sqf.holds) conclude(ClosureProperty::SqfRSubSqfA, ClosureProperty::IrrRSubIrrA, total(sqf_sqf.witness[0]));
  if (!irr_irr.holds)
    conclude(ClosureProperty::IrrRSubIrrA, ClosureProperty::FactoriallyClosed, total(irr_irr.witness[0]));
  if (!fc.holds)
    conclude(ClosureProperty::FactoriallyClosed, ClosureProperty::IrrRSubIrrA,
             total(fc.witness[0]) + total(fc.witness[1]));
  if (!sqf_sqf.holds) {
    unsigned budget = total(sqf_sqf.witness[0]);
    if (saturated(budget)) conclude(ClosureProperty::SqfRSubSqfA, ClosureProperty::SquareFactoriallyClosed, budget);
  }
  if (!sfc.holds) {
    unsigned budget = 2 * total(sfc.witness[0]) + total(sfc.witness[1]);
    if (saturated(budget)) conclude(ClosureProperty::SquareFactoriallyClosed, ClosureProperty::SqfRSubSqfA, budget);
  }
  if (!root.holds) {
    unsigned budget = root.power * total(root.witness[0]);
    if (saturated(budget)) conclude(ClosureProperty::RootClosed, ClosureProperty::SquareFactoriallyClosed, budget);
  }
  return rep;
}

}  // namespace dgcd
