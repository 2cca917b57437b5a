#include "dgcd/theorem_lab.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "dgcd/gcd.hpp"
#include "dgcd/linear_algebra.hpp"

namespace dgcd {

namespace {

struct ExponentLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto x = a.exponents(), y = b.exponents();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

std::vector<Monomial::Exponent> exponent_vector(const Monomial& m) {
  auto e = m.exponents();
  return {e.begin(), e.end()};
}

void require_not_reducible(const Polynomial& g, const IrreducibilityLimits& limits) {
  if (g.is_zero() || g.is_constant()) throw Error("g must be non-constant");
  auto v = is_irreducible(g, limits);
  if (v.reducible()) {
    throw Error("g is reducible: " + std::string("it has a proper factor of degree ") +
                std::to_string(v.left->total_degree()));
  }
}

// Exponent vectors of total degree <= d, by degree, then y1 first.
std::vector<Monomial> monomials_up_to(std::size_t arity, int d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(arity, 0);
  for (int deg = 0; deg <= d; ++deg) {
    // compositions of deg into arity parts, lexicographically descending
    auto rec = [&](auto& self, std::size_t var, unsigned left) -> void {
      if (var + 1 == arity) {
        e[var] = left;
        out.emplace_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[var] = k;
        self(self, var + 1, left - k);
      }
    };
    if (arity == 0) break;
    rec(rec, 0, static_cast<unsigned>(deg));
  }
  return out;
}

// Kernel of the matrix whose columns are the coefficient vectors of `cols`.
std::vector<std::vector<BigRational>> kernel_of_columns(const std::vector<Polynomial>& cols) {
  std::map<Monomial, std::size_t, ExponentLess> row_of;
  for (const auto& c : cols) {
    for (const auto& t : c.terms()) row_of.emplace(t.monomial, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  RationalMatrix a(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& t : cols[j].terms()) a(row_of.at(t.monomial), j) = t.coefficient;
  }
  if (row_of.empty()) {
    // every column is zero
    std::vector<std::vector<BigRational>> basis;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<BigRational> v(cols.size(), 0);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel_basis(std::move(a));
}

Polynomial normal_form(const Polynomial& p, const Polynomial& q) { return divide(p, q).remainder; }

// Products f^a for each exponent vector, built from cached powers.
std::vector<Polynomial> power_products(const PolynomialSystem& sys, const std::vector<Monomial>& exps) {
  std::vector<std::vector<Polynomial>> powers(sys.size());
  std::vector<Polynomial> out;
  for (const auto& a : exps) {
    Polynomial prod = Polynomial::constant(sys.ring(), 1);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(sys.ring(), 1));
      while (pw.size() <= a[i]) pw.push_back(pw.back() * sys.members()[i]);
      if (a[i] > 0) prod *= pw[a[i]];
    }
    out.push_back(std::move(prod));
  }
  return out;
}

}  // namespace

bool check_star_condition(const StarConditionInstance& inst, const IrreducibilityLimits& limits) {
  const auto& sys = inst.sys;
  if (inst.s.size() != sys.size()) throw Error("star condition needs one s_j per member");
  if (inst.i >= sys.size()) throw Error("star condition index out of range");
  if (!same_ring(inst.g.ring(), sys.ring())) throw RingMismatch();
  for (const auto& s : inst.s) {
    if (!same_ring(s.ring(), sys.ring())) throw RingMismatch();
  }
  require_not_reducible(inst.g, limits);
  if (divides(inst.g, inst.s[inst.i])) return false;
  for (std::size_t l = 0; l < sys.arity(); ++l) {
    Polynomial sum(sys.ring());
    for (std::size_t j = 0; j < sys.size(); ++j) {
      if (!inst.s[j].is_zero()) sum += inst.s[j] * partial_derivative(sys.members()[j], l);
    }
    if (!divides(inst.g, sum)) return false;
  }
  return true;
}

std::optional<std::vector<Polynomial>> find_star_tuple(const Polynomial& g, const PolynomialSystem& sys,
                                                       std::size_t i, int max_degree,
                                                       const IrreducibilityLimits& limits) {
  if (i >= sys.size()) throw Error("star condition index out of range");
  if (max_degree < 0) throw Error("degree bound must be non-negative");
  if (!same_ring(g.ring(), sys.ring())) throw RingMismatch();
  require_not_reducible(g, limits);
  const RingPtr& ring = sys.ring();
  const std::size_t m = sys.size();
  std::vector<Monomial> basis = monomials_up_to(sys.arity(), max_degree);
  const std::size_t nb = basis.size();

  // Unknown (j, b) is the coefficient of x^basis[b] in s_j. Each of the n
  // congruences contributes the normal form of x^b * df_j/dx_l mod g.
  std::vector<std::vector<Polynomial>> blocks(m * nb);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Polynomial> partials;
    for (std::size_t l = 0; l < sys.arity(); ++l) partials.push_back(partial_derivative(sys.members()[j], l));
    for (std::size_t b = 0; b < nb; ++b) {
      Polynomial xb = Polynomial::monomial(ring, basis[b]);
      for (std::size_t l = 0; l < sys.arity(); ++l) blocks[j * nb + b].push_back(normal_form(xb * partials[l], g));
    }
  }
  // rows indexed by (l, monomial)
  std::map<std::pair<std::size_t, std::vector<Monomial::Exponent>>, std::size_t> row_of;
  for (const auto& col : blocks) {
    for (std::size_t l = 0; l < col.size(); ++l) {
      for (const auto& t : col[l].terms()) row_of.emplace(std::make_pair(l, exponent_vector(t.monomial)), 0);
    }
  }
  std::size_t r = 0;
  for (auto& [key, idx] : row_of) idx = r++;

  std::vector<std::vector<BigRational>> kernel;
  if (row_of.empty()) {
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      std::vector<BigRational> v(blocks.size(), 0);
      v[c] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    RationalMatrix a(row_of.size(), blocks.size());
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      for (std::size_t l = 0; l < blocks[c].size(); ++l) {
        for (const auto& t : blocks[c][l].terms()) a(row_of.at({l, exponent_vector(t.monomial)}), c) = t.coefficient;
      }
    }
    kernel = kernel_basis(std::move(a));
  }

  // g must not divide s_i; the map s -> NF(s_i mod g) is linear, so if any
  // kernel vector survives it, some basis vector does.
  for (const auto& v : kernel) {
    std::vector<Polynomial> s(m, Polynomial(ring));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t b = 0; b < nb; ++b) {
        const BigRational& c = v[j * nb + b];
        if (c != 0) s[j] += Polynomial::monomial(ring, basis[b], c);
      }
    }
    if (normal_form(s[i], g).is_zero()) continue;
    StarConditionInstance inst{g, sys, s, i};
    if (!check_star_condition(inst, limits)) throw Error("star tuple failed verification");
    return s;
  }
  return std::nullopt;
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Irreducible: return "irreducible";
    case WitnessKind::Squarefree: return "squarefree";
    case WitnessKind::Unrestricted: return "unrestricted";
  }
  return "unrestricted";
}

WitnessKind parse_witness_kind(const std::string& s) {
  if (s == "irreducible") return WitnessKind::Irreducible;
  if (s == "squarefree") return WitnessKind::Squarefree;
  if (s == "unrestricted") return WitnessKind::Unrestricted;
  throw Error("unknown witness kind '" + s + "'");
}

RingPtr witness_ring(std::size_t m) { return make_indexed_ring("y", m); }

bool verify_witness(const Polynomial& g, const Polynomial& w, const PolynomialSystem& sys) {
  if (w.arity() != sys.size()) throw Error("w must have one variable per member");
  if (!same_ring(g.ring(), sys.ring())) throw RingMismatch();
  return divides(g * g, compose(w, sys.members()));
}

std::optional<WitnessReport> find_square_witness(const Polynomial& g, const PolynomialSystem& sys, int max_degree,
                                                 const IrreducibilityLimits& limits) {
  if (max_degree < 1) throw Error("witness degree bound must be positive");
  if (!same_ring(g.ring(), sys.ring())) throw RingMismatch();
  require_not_reducible(g, limits);
  if (!differential_gcd(sys).algebraically_independent) throw Error("system members are algebraically dependent");

  const Polynomial q = normalize_associate(g * g);
  std::vector<Monomial> exps = monomials_up_to(sys.size(), max_degree);
  std::vector<Polynomial> remainders;
  for (const auto& prod : power_products(sys, exps)) remainders.push_back(normal_form(prod, q));
  auto kernel = kernel_of_columns(remainders);
  if (kernel.empty()) return std::nullopt;

  // Every element of the kernel gives g^2 | w(f), but only square-free w
  // carry information about g, so look for one: the basis vectors (lowest
  // degree first), a few fixed combinations of them, and for each of these
  // its square-free part and its irreducible factors.
  RingPtr yring = witness_ring(sys.size());
  auto to_poly = [&](const std::vector<BigRational>& v) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (v[k] != 0) terms.push_back({exps[k], v[k]});
    }
    return normalize_associate(Polynomial::from_terms(yring, std::move(terms)));
  };
  std::vector<Polynomial> candidates;
  for (const auto& v : kernel) candidates.push_back(to_poly(v));
  if (kernel.size() > 1) {
    std::mt19937_64 rng(0);
    for (int c = 0; c < 8; ++c) {
      std::vector<BigRational> v(exps.size(), 0);
      for (const auto& b : kernel) {
        BigRational coeff(static_cast<long>(rng() % 7) - 3);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += coeff * b[k];
      }
      if (std::any_of(v.begin(), v.end(), [](const BigRational& x) { return x != 0; })) candidates.push_back(to_poly(v));
    }
  }

  std::optional<Polynomial> squarefree;
  for (const auto& w : candidates) {
    if (!verify_witness(g, w, sys)) throw Error("kernel vector failed exact verification");
    if (w.is_constant()) continue;
    Polynomial sf = squarefree_part(w);
    bool sf_ok = verify_witness(g, sf, sys);
    if (sf_ok && !squarefree) squarefree = sf;
    if (auto factors = irreducible_factors(sf_ok ? sf : w, limits)) {
      for (const auto& h : *factors) {
        if (verify_witness(g, h, sys)) return WitnessReport{g, sys.members(), h, WitnessKind::Irreducible, true, max_degree};
      }
    }
  }
  if (squarefree) return WitnessReport{g, sys.members(), *squarefree, WitnessKind::Squarefree, true, max_degree};
  return std::nullopt;
}

Theorem1Report theorem1_consistency_check(const Polynomial& g, const PolynomialSystem& sys, int max_degree,
                                          const IrreducibilityLimits& limits) {
  auto jac = differential_gcd(sys);
  Theorem1Report r{g, sys.members(), jac.dgcd, false, std::nullopt, max_degree, true, {}};
  r.g_divides_dgcd = divides(g, jac.dgcd);
  if (!jac.algebraically_independent) {
    r.note = "members are algebraically dependent; witness search skipped";
    return r;
  }
  r.witness = find_square_witness(g, sys, max_degree, limits);
  if (r.witness && !r.g_divides_dgcd) {
    r.consistent = false;
    r.note = "witness found although g does not divide dgcd";
  } else if (!r.witness && r.g_divides_dgcd) {
    r.note = "witness beyond degree bound";
  }
  return r;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, n) by rejection on the raw 64-bit output.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

Polynomial random_polynomial(const RingPtr& ring, unsigned degree, unsigned coeff_bound, std::mt19937_64& rng) {
  if (coeff_bound == 0) throw Error("coefficient bound must be positive");
  std::vector<Monomial> exps = monomials_up_to(ring->arity(), static_cast<int>(degree));
  const std::uint64_t width = 2ULL * coeff_bound + 1;
  for (;;) {
    std::vector<Term> terms;
    for (const auto& e : exps) {
      long c = static_cast<long>(bounded(rng, width)) - static_cast<long>(coeff_bound);
      if (c != 0) terms.push_back({e, BigRational(c)});
    }
    if (!terms.empty()) return Polynomial::from_terms(ring, std::move(terms));
  }
}

CampaignReport theorem2_campaign(const PolynomialSystem& sys, const SamplingConfig& cfg,
                                 const IrreducibilityLimits& limits) {
  if (cfg.trials == 0 || cfg.max_w_degree == 0 || cfg.coeff_bound == 0) {
    throw Error("sampling parameters must be positive");
  }
  auto jac = differential_gcd(sys);
  if (!jac.algebraically_independent) throw Error("system members are algebraically dependent");

  CampaignReport r{sys.members(), cfg, jac.dgcd, jac.dgcd_is_nonzero_constant, 0, 0, 0, {}, false, std::nullopt, {}};
  RingPtr yring = witness_ring(sys.size());

  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng = trial_engine(cfg.seed, trial);
    Polynomial w = random_polynomial(yring, cfg.max_w_degree, cfg.coeff_bound, rng);
    while (w.is_constant()) w = random_polynomial(yring, cfg.max_w_degree, cfg.coeff_bound, rng);
    ++r.sampled;
    if (!is_squarefree(w)) continue;
    bool irreducible = is_irreducible(w, limits).irreducible();
    if (irreducible) ++r.irreducible_w;
    if (cfg.irreducible_only && !irreducible) continue;
    ++r.squarefree_w;
    Polynomial composed = compose(w, sys.members());
    if (!is_squarefree(composed)) r.counterexamples.push_back({w, composed});
  }
  r.assertion_violated = r.jacobian_condition && !r.counterexamples.empty();

  if (!r.jacobian_condition) {
    auto factors = irreducible_factors(jac.dgcd, limits);
    if (!factors) {
      r.note = "could not split dgcd into irreducible factors within caps";
    } else {
      const int bound = static_cast<int>(std::max(cfg.max_w_degree, 1U));
      for (const auto& g : *factors) {
        r.exhibited = find_square_witness(g, sys, bound, limits);
        if (r.exhibited) break;
      }
      if (!r.exhibited) r.note = "no square witness within degree " + std::to_string(bound);
    }
  }
  return r;
}

}  // namespace dgcd
