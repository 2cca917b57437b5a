#include "dgcd/factor.hpp"

#include <algorithm>

#include "dgcd/gcd.hpp"
#include "dgcd/parse.hpp"
#include "dgcd/univariate_factor.hpp"

namespace dgcd {

std::string to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using univariate::ZPoly;

IrreducibilityVerdict irreducible() { return {Irreducibility::Irreducible, std::nullopt, std::nullopt, {}}; }

IrreducibilityVerdict unknown(std::string reason) {
  return {Irreducibility::Unknown, std::nullopt, std::nullopt, std::move(reason)};
}

IrreducibilityVerdict split(const Polynomial& p, const Polynomial& b) {
  Polynomial c = divide_exact(p, b);
  return {Irreducibility::Reducible, normalize_associate(b), normalize_associate(c), {}};
}

// Mixed-radix Kronecker map: x_{vars[i]} -> t^{place[i]}.
struct Kronecker {
  std::vector<std::size_t> vars;
  std::vector<unsigned long> radix;
  std::vector<unsigned long> place;

  Kronecker(std::vector<std::size_t> v, std::vector<unsigned long> r) : vars(std::move(v)), radix(std::move(r)) {
    unsigned long acc = 1;
    for (auto x : radix) {
      place.push_back(acc);
      acc *= x;
    }
  }

  ZPoly encode(const Polynomial& q) const {
    ZPoly out;
    for (const auto& t : q.terms()) {
      unsigned long k = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) k += t.monomial[vars[i]] * place[i];
      if (out.size() <= k) out.resize(k + 1, 0);
      out[k] += t.coefficient.get_num();
    }
    univariate::trim(out);
    return out;
  }

  std::optional<Polynomial> decode(const ZPoly& f, const RingPtr& ring) const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] == 0) continue;
      std::vector<Monomial::Exponent> e(ring->arity(), 0);
      unsigned long rest = k;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        e[vars[i]] = static_cast<Monomial::Exponent>(rest % radix[i]);
        rest /= radix[i];
      }
      if (rest != 0) return std::nullopt;
      terms.push_back({Monomial(std::move(e)), BigRational(f[k])});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }
};

IrreducibilityVerdict kronecker_search(const Polynomial& q, const IrreducibilityLimits& limits) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < q.arity(); ++v) {
    if (q.involves(v)) vars.push_back(v);
  }
  const long half = q.total_degree() / 2;

  // A proper factor of smallest total degree has every exponent <= half.
  std::vector<unsigned long> small, full;
  for (auto v : vars) {
    small.push_back(static_cast<unsigned long>(std::min(q.degree_in(v), half)) + 1);
    full.push_back(static_cast<unsigned long>(q.degree_in(v)) + 1);
  }
  Kronecker map(vars, small);
  ZPoly image = map.encode(q);
  if (image.empty()) {
    map = Kronecker(vars, full);
    image = map.encode(q);
  }

  univariate::Factorization fz;
  try {
    univariate::FactorOptions opts;
    opts.max_candidates = limits.max_candidates;
    fz = univariate::factor(image, opts);
  } catch (const univariate::BudgetExceeded&) {
    return unknown("univariate recombination budget exceeded");
  }

  std::size_t count = 1;
  for (const auto& f : fz.factors) {
    count *= f.second + 1;
    if (count > limits.max_candidates) return unknown("too many candidate divisors");
  }

  std::vector<unsigned> k(fz.factors.size(), 0);
  for (;;) {
    std::size_t j = 0;
    while (j < k.size() && k[j] == fz.factors[j].second) k[j++] = 0;
    if (j == k.size()) break;
    ++k[j];

    ZPoly cand{1};
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (unsigned e = 0; e < k[i]; ++e) cand = univariate::multiply(cand, fz.factors[i].first);
    }
    auto g = map.decode(cand, q.ring());
    if (!g || g->is_constant() || g->total_degree() > half) continue;
    if (exact_quotient(q, *g)) return split(q, *g);
  }
  return irreducible();
}

}  // namespace

IrreducibilityVerdict is_irreducible(const Polynomial& p, const IrreducibilityLimits& limits) {
  if (p.is_zero() || p.is_constant()) throw Error("is_irreducible: input must be non-constant");
  Polynomial q = normalize_associate(p);
  if (q.total_degree() == 1) return irreducible();

  for (std::size_t v = 0; v < q.arity(); ++v) {
    Polynomial x = Polynomial::variable(q.ring(), v);
    if (q.involves(v) && divides(x, q)) return split(q, x);
  }

  std::size_t nvars = 0;
  for (std::size_t v = 0; v < q.arity(); ++v) {
    if (!q.involves(v)) continue;
    ++nvars;
    Polynomial c = content_in(q, v);
    if (!c.is_constant()) return split(q, c);
  }

  if (!is_squarefree(q)) {
    std::vector<Polynomial> parts{q};
    for (std::size_t v = 0; v < q.arity(); ++v) {
      if (q.involves(v)) parts.push_back(partial_derivative(q, v));
    }
    return split(q, gcd_many(parts));
  }

  if (q.total_degree() > limits.max_total_degree) {
    return unknown("total degree " + std::to_string(q.total_degree()) + " exceeds cap " +
                   std::to_string(limits.max_total_degree));
  }
  if (nvars > limits.max_variables) {
    return unknown(std::to_string(nvars) + " variables exceed cap " + std::to_string(limits.max_variables));
  }
  for (const auto& t : q.terms()) {
    if (abs(t.coefficient.get_num()) > limits.max_height) {
      return unknown("coefficient height exceeds cap " + limits.max_height.get_str());
    }
  }
  return kronecker_search(q, limits);
}

namespace {

bool collect(const Polynomial& p, const IrreducibilityLimits& limits, std::vector<Polynomial>& out) {
  auto v = is_irreducible(p, limits);
  switch (v.status) {
    case Irreducibility::Irreducible:
      out.push_back(normalize_associate(p));
      return true;
    case Irreducibility::Reducible:
      return collect(*v.left, limits, out) && collect(*v.right, limits, out);
    case Irreducibility::Unknown:
      return false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Polynomial>> irreducible_factors(const Polynomial& p, const IrreducibilityLimits& limits) {
  if (p.is_zero() || p.is_constant()) throw Error("irreducible_factors: input must be non-constant");
  std::vector<Polynomial> out;
  if (!collect(p, limits, out)) return std::nullopt;
  std::vector<std::pair<std::string, Polynomial>> keyed;
  for (auto& f : out) keyed.emplace_back(print_polynomial(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    long da = a.second.total_degree(), db = b.second.total_degree();
    return da != db ? da < db : a.first < b.first;
  });
  out.clear();
  for (auto& [s, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace dgcd
