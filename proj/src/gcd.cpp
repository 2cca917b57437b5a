#include "dgcd/gcd.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace dgcd {

namespace {

// Everything in this block works on polynomials with integer coefficients
// and returns results with a positive leading coefficient.

using UPoly = std::vector<Polynomial>;  // dense in the main variable

BigInteger integer_content(const Polynomial& p) {
  BigInteger g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial positive(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) p = -p;
  return p;
}

bool is_one(const Polynomial& p) { return p.is_constant() && !p.is_zero() && p.leading_coefficient() == 1; }

Polynomial int_constant(const RingPtr& ring, const BigInteger& c) {
  return Polynomial::constant(ring, BigRational(c));
}

// gcd of a monomial c*x^e with an arbitrary nonzero polynomial.
Polynomial monomial_gcd(const Term& mono, const Polynomial& other) {
  BigInteger c = integer_content(other);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), mono.coefficient.get_num_mpz_t());
  Monomial e = mono.monomial;
  for (const auto& t : other.terms()) {
    for (std::size_t i = 0; i < e.arity(); ++i) e[i] = std::min(e[i], t.monomial[i]);
  }
  return Polynomial::monomial(other.ring(), std::move(e), BigRational(c));
}

Polynomial gcd_z(const Polynomial& a, const Polynomial& b);

UPoly to_upoly(const Polynomial& p, std::size_t var) { return coefficients_in(p, var); }

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

long degree(const UPoly& u) { return static_cast<long>(u.size()) - 1; }

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const long db = degree(b);
  const Polynomial& lb = b.back();
  for (long k = degree(a); k >= db; --k) {
    Polynomial r = a[static_cast<std::size_t>(k)];
    for (auto& c : a) {
      if (!c.is_zero()) c *= lb;
    }
    if (r.is_zero()) continue;
    for (long j = 0; j <= db; ++j) {
      const Polynomial& bj = b[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      a[static_cast<std::size_t>(k - db + j)] -= r * bj;
    }
  }
  a.erase(a.begin() + std::max<long>(db, 0), a.end());
  trim(a);
  return a;
}

Polynomial content_z(const Polynomial& p, std::size_t var) {
  auto coeffs = to_upoly(p, var);
  Polynomial g(p.ring());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it->is_zero()) continue;
    g = g.is_zero() ? positive(*it) : gcd_z(g, *it);
    if (is_one(g)) break;
  }
  return g;
}

// gcd of two polynomials that are primitive with respect to `var` and both
// have positive degree in it.
Polynomial subresultant_gcd(const Polynomial& pa, const Polynomial& pb, std::size_t var) {
  const RingPtr& ring = pa.ring();
  UPoly a = to_upoly(pa, var), b = to_upoly(pb, var);
  if (degree(a) < degree(b)) std::swap(a, b);
  Polynomial g = Polynomial::constant(ring, 1);
  Polynomial h = Polynomial::constant(ring, 1);
  for (;;) {
    const long delta = degree(a) - degree(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return Polynomial::constant(ring, 1);
    a = std::move(b);
    Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) {
      if (!c.is_zero()) c = divide_exact(c, divisor);
    }
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Polynomial last = from_coefficients(ring, b, var);
  return positive(divide_exact(last, content_z(last, var)));
}

BigInteger max_norm(const Polynomial& p) {
  BigInteger m = 0;
  for (const auto& t : p.terms()) {
    BigInteger c = abs(t.coefficient.get_num());
    if (c > m) m = c;
  }
  return m;
}

// Substitutes the integer xi for `var`.
Polynomial evaluate_at(const Polynomial& p, std::size_t var, const BigInteger& xi) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    BigInteger c = t.coefficient.get_num();
    BigInteger power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), t.monomial[var]);
    Monomial m = t.monomial;
    m[var] = 0;
    terms.push_back({std::move(m), BigRational(c * power)});
  }
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

// Inverse of evaluate_at for coefficients below xi/2 in absolute value:
// peel off symmetric base-xi digits as coefficients of var^0, var^1, ...
std::optional<Polynomial> interpolate(Polynomial h, std::size_t var, const BigInteger& xi, long max_degree) {
  std::vector<Term> out;
  const BigInteger half = xi / 2;
  for (long i = 0; !h.is_zero(); ++i) {
    if (i > max_degree) return std::nullopt;
    std::vector<Term> digit, rest;
    for (const auto& t : h.terms()) {
      BigInteger c = t.coefficient.get_num();
      BigInteger r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      BigInteger q = (c - r) / xi;
      if (r != 0) {
        Monomial m = t.monomial;
        m[var] = static_cast<Monomial::Exponent>(i);
        digit.push_back({std::move(m), BigRational(r)});
      }
      if (q != 0) rest.push_back({t.monomial, BigRational(q)});
    }
    for (auto& d : digit) out.push_back(std::move(d));
    h = Polynomial::from_terms(h.ring(), std::move(rest));
  }
  return Polynomial::from_terms(h.ring(), std::move(out));
}

// Heuristic gcd by a single large evaluation point (Char, Geddes and Gonnet).
// With xi above twice the smaller coefficient norm, a primitive
// reconstruction that divides both inputs is their gcd; anything else falls
// through to the subresultant path.
std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
  BigInteger ca = integer_content(a), cb = integer_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Polynomial pa = divide_exact(a, int_constant(a.ring(), ca));
  Polynomial pb = divide_exact(b, int_constant(b.ring(), cb));
  const long max_degree = std::min(pa.degree_in(var), pb.degree_in(var));
  BigInteger xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 2;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Polynomial ea = evaluate_at(pa, var, xi), eb = evaluate_at(pb, var, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      Polynomial image = gcd_z(ea, eb);
      if (auto h = interpolate(image, var, xi, max_degree)) {
        Polynomial cand = h->is_zero() ? *h : divide_exact(*h, int_constant(h->ring(), integer_content(*h)));
        if (!cand.is_zero() && exact_quotient(pa, cand) && exact_quotient(pb, cand)) {
          return positive(int_constant(a.ring(), c) * cand);
        }
      }
    }
    BigInteger root = sqrt(sqrt(xi));
    xi = xi * 73794 * root / 27011;
  }
  return std::nullopt;
}

Polynomial gcd_z(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  if (a.is_constant() || b.is_constant()) {
    BigInteger c = integer_content(a);
    BigInteger d = integer_content(b);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return int_constant(a.ring(), c);
  }
  if (a.is_monomial()) return monomial_gcd(a.leading_term(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading_term(), a);

  // Main variable: smallest degree first, index breaks ties.
  std::size_t var = a.arity();
  std::tuple<long, long> best{0, 0};
  for (std::size_t v = 0; v < a.arity(); ++v) {
    long da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 && db == 0) continue;
    std::tuple<long, long> key{std::min(da, db), std::max(da, db)};
    if (var == a.arity() || key < best) {
      var = v;
      best = key;
    }
  }

  const long da = a.degree_in(var), db = b.degree_in(var);
  if (da == 0 || db == 0) {
    // One side is free of var: every common divisor divides each coefficient.
    const Polynomial& with = da == 0 ? b : a;
    Polynomial acc = positive(da == 0 ? a : b);
    auto coeffs = to_upoly(with, var);
    for (auto it = coeffs.rbegin(); it != coeffs.rend() && !is_one(acc); ++it) {
      if (!it->is_zero()) acc = gcd_z(acc, *it);
    }
    return acc;
  }

  if (auto h = heuristic_gcd(a, b, var)) return *h;

  Polynomial ca = content_z(a, var), cb = content_z(b, var);
  Polynomial content = gcd_z(ca, cb);
  Polynomial g = subresultant_gcd(divide_exact(a, ca), divide_exact(b, cb), var);
  return positive(content * g);
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
  if (p.is_zero()) return normalize_associate(q);
  if (q.is_zero()) return normalize_associate(p);
  return normalize_associate(gcd_z(normalize_associate(p), normalize_associate(q)));
}

Polynomial gcd_many(std::span<const Polynomial> ps) {
  if (ps.empty()) throw Error("gcd_many: empty input");
  Polynomial acc = normalize_associate(ps.front());
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (acc.is_constant() && !acc.is_zero()) break;
    acc = gcd(acc, ps[i]);
  }
  return acc;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  if (coeffs.empty()) return Polynomial(p.ring());
  return gcd_many(coeffs);
}

namespace {

std::vector<Polynomial> with_partials(const Polynomial& p) {
  std::vector<Polynomial> out{p};
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (p.involves(v)) out.push_back(partial_derivative(p, v));
  }
  return out;
}

}  // namespace

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw Error("is_squarefree: zero polynomial");
  if (p.is_constant()) return true;
  return gcd_many(with_partials(p)).is_constant();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) throw Error("squarefree_part: input must be non-constant");
  Polynomial repeated = gcd_many(with_partials(p));
  return normalize_associate(divide_exact(p, repeated));
}

Polynomial SquarefreeDecomposition::expand() const {
  if (parts.empty()) throw Error("empty square-free decomposition");
  Polynomial r = Polynomial::constant(parts.front().factor.ring(), unit);
  for (const auto& part : parts) r *= part.factor.pow(part.multiplicity);
  return r;
}

namespace {

// Multiplicity -> product of the factors with that multiplicity.
using PartMap = std::map<unsigned, Polynomial>;

void merge_part(PartMap& parts, unsigned mult, const Polynomial& f) {
  auto it = parts.find(mult);
  if (it == parts.end()) {
    parts.emplace(mult, f);
  } else {
    it->second *= f;
  }
}

void decompose_into(const Polynomial& p, PartMap& parts) {
  if (p.is_constant()) return;
  std::size_t var = 0;
  while (!p.involves(var)) ++var;
  Polynomial content = content_in(p, var);
  Polynomial prim = divide_exact(p, content);

  // Yun's algorithm in var on the primitive part: every irreducible factor of
  // prim involves var, so its derivative in var is nonzero.
  Polynomial d = partial_derivative(prim, var);
  Polynomial a = gcd(prim, d);
  Polynomial b = divide_exact(prim, a);
  Polynomial c = divide_exact(d, a);
  Polynomial e = c - partial_derivative(b, var);
  for (unsigned i = 1; !b.is_constant(); ++i) {
    Polynomial ai = gcd(b, e);
    b = divide_exact(b, ai);
    c = divide_exact(e, ai);
    e = c - partial_derivative(b, var);
    if (!ai.is_constant()) merge_part(parts, i, ai);
  }
  decompose_into(content, parts);
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) throw Error("squarefree_decomposition: input must be non-constant");
  PartMap parts;
  decompose_into(p, parts);
  SquarefreeDecomposition out;
  out.unit = 1;
  for (auto& [mult, f] : parts) out.parts.push_back({mult, normalize_associate(f)});
  Polynomial product = out.expand();
  out.unit = p.leading_coefficient() / product.leading_coefficient();
  if (product * out.unit != p) throw Error("squarefree_decomposition: reconstruction failed");
  return out;
}

}  // namespace dgcd
