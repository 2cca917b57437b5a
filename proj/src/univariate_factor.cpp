#include "dgcd/univariate_factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dgcd/gcd.hpp"

namespace dgcd::univariate {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw Error("division by the zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  const BigInteger& lb = b.back();
  ZPoly q(a.size() - b.size() + 1, 0);
  for (long k = degree(r) - degree(b); k >= 0; --k) {
    BigInteger& top = r[static_cast<std::size_t>(k) + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    BigInteger c = top / lb;
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

BigInteger content(const ZPoly& f) {
  BigInteger g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

ZPoly primitive_positive(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  BigInteger c = content(f);
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// F_p

namespace fp {

namespace {

using u64 = std::uint64_t;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

Poly make_monic(Poly f, u64 p) {
  if (f.empty()) return f;
  u64 inv = inverse(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Quotient and remainder.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  if (b.empty()) throw Error("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  u64 inv = inverse(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = a[k + b.size() - 1] * inv % p;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) { return remainder(multiply(a, b, p), m, p); }

Poly powmod(Poly base, const BigInteger& e, const Poly& m, u64 p) {
  Poly r{1};
  r = remainder(r, m, p);
  base = remainder(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m, p);
  }
  return r;
}

// Distinct-degree factorization: pairs (product of all factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f, u64 p) {
  std::vector<std::pair<Poly, unsigned>> out;
  f = make_monic(f, p);
  const Poly t{0, 1};
  Poly h = remainder(t, f, p);
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.size() - 1); ++d) {
    h = powmod(h, BigInteger(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(sub(h, t, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = remainder(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
  return out;
}

void equal_degree(const Poly& g, unsigned d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  BigInteger q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  BigInteger e = (q - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, p - 1);
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (a.size() < 2) continue;
    Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
    Poly c = gcd(b, g, p);
    if (c.size() > 1 && c.size() < g.size()) {
      equal_degree(c, d, p, rng, out);
      equal_degree(divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

Poly reduce(const ZPoly& f, std::uint64_t p) {
  Poly r(f.size());
  BigInteger m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(m.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

Poly multiply(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly remainder(Poly a, const Poly& b, std::uint64_t p) { return divmod(std::move(a), b, p).second; }

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// Bezout coefficients s*a + t*b = 1 for coprime a, b.
std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, multiply(q, s1, p), p);
    Poly t2 = sub(t0, multiply(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error("bezout: inputs are not coprime mod p");
  u64 inv = inverse(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Z / mZ and Hensel lifting

namespace {

using fp::Poly;

ZPoly lift_fp(const Poly& f) { return ZPoly(f.begin(), f.end()); }

void reduce_mod(ZPoly& f, const BigInteger& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const BigInteger& m) {
  ZPoly r = multiply(a, b);
  reduce_mod(r, m);
  return r;
}

ZPoly add_mod(ZPoly a, const ZPoly& b, const BigInteger& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  reduce_mod(a, m);
  return a;
}

ZPoly sub_mod(ZPoly a, const ZPoly& b, const BigInteger& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  reduce_mod(a, m);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divmod_monic(ZPoly a, const ZPoly& b, const BigInteger& m) {
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInteger c = a[k + b.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  reduce_mod(a, m);
  reduce_mod(q, m);
  return {q, a};
}

struct Lifted {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Returns the same relations modulo m2, where m | m2 | m^2.
Lifted hensel_step(const ZPoly& f, const Lifted& in, const BigInteger& m2) {
  ZPoly e = sub_mod(f, multiply(in.g, in.h), m2);
  auto [q, r] = divmod_monic(mul_mod(in.s, e, m2), in.h, m2);
  Lifted out;
  out.g = add_mod(add_mod(in.g, mul_mod(in.t, e, m2), m2), mul_mod(q, in.g, m2), m2);
  out.h = add_mod(in.h, r, m2);
  ZPoly b = sub_mod(add_mod(mul_mod(in.s, out.g, m2), mul_mod(in.t, out.h, m2), m2), ZPoly{1}, m2);
  auto [c, d] = divmod_monic(mul_mod(in.s, b, m2), out.h, m2);
  out.s = sub_mod(in.s, d, m2);
  out.t = sub_mod(sub_mod(in.t, mul_mod(in.t, b, m2), m2), mul_mod(c, out.g, m2), m2);
  return out;
}

ZPoly make_monic_mod(ZPoly f, const BigInteger& m) {
  BigInteger inv;
  if (mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t()) == 0) throw Error("leading coefficient not invertible");
  for (auto& c : f) c *= inv;
  reduce_mod(f, m);
  return f;
}

Poly product_mod_p(std::span<const Poly> fs, std::uint64_t p) {
  Poly r{1};
  for (const auto& f : fs) r = fp::multiply(r, f, p);
  return r;
}

// Monic lifts modulo M = p^k of the monic factors of f modulo p, same order.
std::vector<ZPoly> lift_all(const ZPoly& f, std::span<const Poly> factors, std::uint64_t p, const BigInteger& M) {
  if (factors.size() == 1) return {make_monic_mod(f, M)};
  const std::size_t half = factors.size() / 2;
  auto left = factors.subspan(0, half);
  auto right = factors.subspan(half);
  Poly h0 = product_mod_p(left, p);
  Poly lc{fp::reduce(ZPoly{f.back()}, p)};
  Poly g0 = fp::multiply(lc, product_mod_p(right, p), p);
  auto [s0, t0] = fp::bezout(g0, h0, p);
  Lifted cur{lift_fp(g0), lift_fp(h0), lift_fp(s0), lift_fp(t0)};
  BigInteger m = p;
  while (m < M) {
    BigInteger m2 = m * m;
    if (m2 > M) m2 = M;
    cur = hensel_step(f, cur, m2);
    m = m2;
  }
  std::vector<ZPoly> out = lift_all(cur.h, left, p, M);
  std::vector<ZPoly> rest = lift_all(cur.g, right, p, M);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::uint64_t next_prime(std::uint64_t n) {
  for (;;) {
    ++n;
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) return n;
  }
}

// Degrees achievable as sums of sub-multisets of the given degrees.
std::vector<bool> subset_degrees(const std::vector<std::size_t>& degs, std::size_t n) {
  std::vector<bool> can(n + 1, false);
  can[0] = true;
  for (std::size_t d : degs) {
    for (std::size_t s = n; s >= d && s > 0; --s) {
      if (can[s - d]) can[s] = true;
    }
  }
  return can;
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<Poly> factors;
};

BigInteger symmetric(const BigInteger& c, const BigInteger& m) {
  BigInteger r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& input, const FactorOptions& options) {
  ZPoly f = input;
  trim(f);
  if (f.empty()) throw Error("factor_squarefree: zero polynomial");
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // Examine several good primes. The intersection of their achievable factor
  // degrees bounds the degrees of true factors.
  std::vector<bool> allowed(n + 1, true);
  PrimeChoice best;
  std::uint64_t p = 2;
  for (unsigned found = 0; found < options.primes_to_try;) {
    p = next_prime(p);
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    Poly fbar = fp::reduce(f, p);
    Poly d;
    for (std::size_t i = 1; i < fbar.size(); ++i) d.push_back(fbar[i] * (i % p) % p);
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty() || fp::gcd(fbar, d, p).size() != 1) continue;
    ++found;
    std::vector<Poly> fs = fp::factor_squarefree(fbar, p, p);
    std::vector<std::size_t> degs;
    for (const auto& g : fs) degs.push_back(g.size() - 1);
    auto can = subset_degrees(degs, n);
    for (std::size_t s = 0; s <= n; ++s) allowed[s] = allowed[s] && can[s];
    if (best.p == 0 || fs.size() < best.factors.size()) best = {p, std::move(fs)};
    if (best.factors.size() == 1) return {f};
  }
  if (std::count(allowed.begin(), allowed.end(), true) == 2) return {f};

  // Coefficient bound for lc(f) * g / lc(g), g any factor of f.
  BigInteger norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  BigInteger root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  BigInteger bound = abs(f.back()) * (root + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  BigInteger M = best.p;
  while (M <= 2 * bound) M *= best.p;

  std::vector<ZPoly> lifted = lift_all(f, best.factors, best.p, M);

  std::vector<ZPoly> result;
  ZPoly rem = f;
  std::size_t candidates = 0;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    bool split = false;
    for (;;) {
      std::size_t deg = 0;
      for (auto i : idx) deg += lifted[i].size() - 1;
      if (allowed[deg]) {
        if (++candidates > options.max_candidates) throw BudgetExceeded("factor recombination budget exceeded");
        ZPoly cand{rem.back()};
        for (auto i : idx) cand = mul_mod(cand, lifted[i], M);
        for (auto& c : cand) c = symmetric(c, M);
        cand = primitive_positive(cand);
        ZPoly q;
        bool ok = !cand.empty() && (rem[0] == 0 || cand[0] == 0 || mpz_divisible_p(rem[0].get_mpz_t(), cand[0].get_mpz_t()));
        if (ok && divide_exact(rem, cand, q)) {
          result.push_back(cand);
          rem = std::move(q);
          for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
          split = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!split) ++s;
  }
  if (rem.size() > 1) result.push_back(primitive_positive(rem));
  std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
    return a.size() != b.size() ? a.size() < b.size() : std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return result;
}

Factorization factor(const ZPoly& input, const FactorOptions& options) {
  ZPoly f = input;
  trim(f);
  if (f.empty()) throw Error("factor: zero polynomial");
  Factorization out;
  out.unit = content(f);
  if (f.back() < 0) out.unit = -out.unit;
  if (f.size() == 1) return out;

  RingPtr ring = make_ring({"t"});
  std::vector<Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) terms.push_back({Monomial(std::vector<Monomial::Exponent>{static_cast<Monomial::Exponent>(i)}), BigRational(f[i] / out.unit)});
  }
  auto d = squarefree_decomposition(Polynomial::from_terms(ring, std::move(terms)));
  for (const auto& part : d.parts) {
    ZPoly g(static_cast<std::size_t>(part.factor.total_degree()) + 1, 0);
    for (const auto& t : part.factor.terms()) g[t.monomial[0]] = t.coefficient.get_num();
    for (auto& h : factor_squarefree(g, options)) out.factors.emplace_back(std::move(h), part.multiplicity);
  }
  return out;
}

}  // namespace dgcd::univariate
