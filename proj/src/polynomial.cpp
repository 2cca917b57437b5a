#include "dgcd/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace dgcd {

// ---------------------------------------------------------------------------
// Rationals, monomial orders and rings

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  BigRational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error("invalid rational literal '" + s + "'");
  }
  if (r.get_den() == 0) throw Error("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.arity();
  if (order != MonomialOrder::Lex) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
  }
  if (order == MonomialOrder::GradedReverseLex) {
    // Equal degree: the smaller exponent in the last differing variable wins.
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GradedReverseLex: return "grevlex";
    case MonomialOrder::GradedLex: return "deglex";
    case MonomialOrder::Lex: return "lex";
  }
  return "grevlex";
}

std::optional<MonomialOrder> parse_monomial_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::GradedReverseLex;
  if (name == "deglex") return MonomialOrder::GradedLex;
  if (name == "lex") return MonomialOrder::Lex;
  return std::nullopt;
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingContext::RingContext(std::vector<std::string> variable_names, MonomialOrder order)
    : names_(std::move(variable_names)), order_(order) {
  if (names_.empty()) throw Error("a ring needs at least one variable");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_identifier(names_[i])) {
      throw Error("invalid variable name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error("duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variable_names, MonomialOrder order) {
  return std::make_shared<const RingContext>(std::move(variable_names), order);
}

RingPtr make_indexed_ring(std::string_view prefix, std::size_t arity, MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= arity; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_ring(std::move(names), order);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial without a ring");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw Error("polynomial without a ring");
  for (const auto& t : terms) {
    if (t.monomial.arity() != ring->arity()) throw Error("monomial arity does not match ring");
  }
  const RingContext& r = *ring;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, BigRational c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.arity()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (!ring || index >= ring->arity()) throw Error("variable index out of range");
  Monomial m = Monomial::variable(ring->arity(), index);
  return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, BigRational c) {
  Polynomial p(std::move(ring));
  if (m.arity() != p.arity()) throw Error("monomial arity does not match ring");
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

BigRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.monomial.total_degree()));
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  if (var >= arity()) throw Error("variable index out of range");
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.monomial[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

// Merges two sorted term lists, negating b when `subtract` is set.
std::vector<Term> merge_terms(const RingContext& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
      continue;
    }
    auto c = ring.compare(a[i].monomial, b[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      BigRational s = subtract ? BigRational(a[i].coefficient - b[j].coefficient)
                               : BigRational(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  require_same_ring(*this, q);
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(*ring_, terms_, q.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  require_same_ring(*this, q);
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(*ring_, terms_, q.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
  if (q.terms_.size() == 1) {
    Polynomial r = p.shifted(q.terms_[0].monomial);
    return r *= q.terms_[0].coefficient;
  }
  if (p.terms_.size() == 1) {
    Polynomial r = q.shifted(p.terms_[0].monomial);
    return r *= p.terms_[0].coefficient;
  }
  std::vector<Term> prods;
  prods.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      prods.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    }
  }
  return Polynomial::from_terms(p.ring_, std::move(prods));
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  // Multiplying every monomial by m preserves any monomial order.
  Polynomial r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

// ---------------------------------------------------------------------------
// Calculus, substitution, evaluation

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.arity()) throw Error("partial derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.monomial[var_index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[var_index] = e - 1;
    out.push_back({std::move(m), t.coefficient * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial compose(const Polynomial& w, std::span<const Polynomial> fs) {
  if (fs.size() != w.arity()) {
    throw Error("compose: expected " + std::to_string(w.arity()) + " substitutions, got " +
                std::to_string(fs.size()));
  }
  if (fs.empty()) throw Error("compose: empty substitution");
  const RingPtr& target = fs.front().ring();
  for (const auto& f : fs) {
    if (!same_ring(f.ring(), target)) throw RingMismatch("compose: substitutions live in different rings");
  }
  // powers[i][k] = fs[i]^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) powers[i].push_back(Polynomial::constant(target, 1));
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * fs[i]);
    return powers[i][k];
  };
  std::vector<Term> acc;
  for (const auto& t : w.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (t.monomial[i] > 0) prod *= power(i, t.monomial[i]);
    }
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc));
}

BigRational evaluate(const Polynomial& p, std::span<const BigRational> point) {
  if (point.size() != p.arity()) throw Error("evaluate: point length does not match ring arity");
  BigRational sum = 0;
  for (const auto& t : p.terms()) {
    BigRational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Monomial::Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

BigRational rational_content(const Polynomial& p) {
  if (p.is_zero()) return 0;
  BigInteger num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  BigRational c = make_rational(num_gcd, den_lcm);
  if (p.leading_coefficient() < 0) c = -c;
  return c;
}

Polynomial normalize_associate(const Polynomial& p) {
  if (p.is_zero()) return p;
  BigRational c = rational_content(p);
  if (c == 1) return p;
  Polynomial r = p;
  r *= BigRational(1 / c);
  return r;
}

// ---------------------------------------------------------------------------
// Division by a single divisor

namespace {

// Reduces `work` (terms sorted descending). Without a remainder sink, stops
// as soon as a leading term is not divisible and reports failure.
bool reduce(const Polynomial& divisor, std::vector<Term>& work, std::vector<Term>& quotient,
            std::vector<Term>* remainder, const RingContext& ring) {
  const Term& lead = divisor.leading_term();
  BigRational inv_lc = 1 / lead.coefficient;
  std::vector<Term> rest = std::move(work);
  std::size_t start = 0;
  while (start < rest.size()) {
    const Term& top = rest[start];
    if (!lead.monomial.divides(top.monomial)) {
      if (!remainder) return false;
      remainder->push_back(top);
      ++start;
      continue;
    }
    Term q{top.monomial / lead.monomial, top.coefficient * inv_lc};
    // rest[start:] -= q * divisor; the leading terms cancel exactly.
    std::vector<Term> sub;
    sub.reserve(divisor.size());
    for (std::size_t k = 1; k < divisor.terms().size(); ++k) {
      const Term& d = divisor.terms()[k];
      sub.push_back({d.monomial * q.monomial, d.coefficient * q.coefficient});
    }
    std::vector<Term> tail(std::make_move_iterator(rest.begin() + static_cast<long>(start) + 1),
                           std::make_move_iterator(rest.end()));
    rest = merge_terms(ring, tail, sub, true);
    start = 0;
    quotient.push_back(std::move(q));
  }
  return true;
}

}  // namespace

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  require_same_ring(dividend, divisor);
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  std::vector<Term> work = dividend.terms();
  std::vector<Term> quotient, remainder;
  reduce(divisor, work, quotient, &remainder, *dividend.ring());
  return {Polynomial::from_terms(dividend.ring(), std::move(quotient)),
          Polynomial::from_terms(dividend.ring(), std::move(remainder))};
}

std::optional<Polynomial> exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
  require_same_ring(dividend, divisor);
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (dividend.is_zero()) return Polynomial(dividend.ring());
  if (divisor.is_constant()) {
    Polynomial r = dividend;
    r *= BigRational(1 / divisor.leading_coefficient());
    return r;
  }
  std::vector<Term> work = dividend.terms();
  std::vector<Term> quotient;
  if (!reduce(divisor, work, quotient, nullptr, *dividend.ring())) return std::nullopt;
  return Polynomial::from_terms(dividend.ring(), std::move(quotient));
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  auto q = exact_quotient(dividend, divisor);
  if (!q) throw Error("inexact polynomial division");
  return *std::move(q);
}

bool divides(const Polynomial& divisor, const Polynomial& dividend) {
  if (divisor.is_zero()) return dividend.is_zero();
  return exact_quotient(dividend, divisor).has_value();
}

// ---------------------------------------------------------------------------
// Recursive view

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  long d = p.degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max<long>(d + 1, 0)));
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    auto e = m[var];
    m[var] = 0;
    buckets[e].push_back({std::move(m), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  // Terms of the full polynomial are sorted; dropping one variable need not
  // preserve that under every order, so re-canonicalize.
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.ring(), std::move(b)));
  return out;
}

Polynomial from_coefficients(const RingPtr& ring, std::span<const Polynomial> coeffs,
                             std::size_t var) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms()) {
      Monomial m = t.monomial;
      m[var] += static_cast<Monomial::Exponent>(e);
      out.push_back({std::move(m), t.coefficient});
    }
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
  long d = p.degree_in(var);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (static_cast<long>(t.monomial[var]) != d) continue;
    Monomial m = t.monomial;
    m[var] = 0;
    out.push_back({std::move(m), t.coefficient});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

}  // namespace dgcd
