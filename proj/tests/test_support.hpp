#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dgcd/parse.hpp"
#include "dgcd/polynomial.hpp"

namespace dgcd::testing {

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

/// Small deterministic generator for property tests. Coefficients are drawn
/// independently from [-bound, bound]; each monomial of total degree <= degree
/// is present with probability `density`.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  BigRational rational(std::int64_t bound) {
    std::int64_t num = integer(-bound, bound);
    std::int64_t den = integer(1, bound);
    return make_rational(BigInteger(static_cast<long>(num)), BigInteger(static_cast<long>(den)));
  }

  Polynomial poly(const RingPtr& ring, unsigned degree, std::int64_t bound, double density = 0.5,
                  bool rational_coeffs = false) {
    std::vector<Term> terms;
    std::vector<Monomial::Exponent> e(ring->arity(), 0);
    enumerate(ring, degree, 0, e, [&](const Monomial& m) {
      if (std::uniform_real_distribution<double>(0, 1)(rng_) > density) return;
      BigRational c = rational_coeffs ? rational(bound) : BigRational(static_cast<long>(integer(-bound, bound)));
      terms.push_back({m, c});
    });
    return Polynomial::from_terms(ring, std::move(terms));
  }

  Polynomial nonzero_poly(const RingPtr& ring, unsigned degree, std::int64_t bound, double density = 0.5) {
    for (;;) {
      Polynomial p = poly(ring, degree, bound, density);
      if (!p.is_zero()) return p;
    }
  }

  Polynomial nonconstant_poly(const RingPtr& ring, unsigned degree, std::int64_t bound, double density = 0.5) {
    for (;;) {
      Polynomial p = poly(ring, degree, bound, density);
      if (!p.is_constant()) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  template <typename F>
  static void enumerate(const RingPtr& ring, unsigned remaining, std::size_t var,
                        std::vector<Monomial::Exponent>& e, F&& f) {
    if (var == ring->arity()) {
      f(Monomial(e));
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[var] = k;
      enumerate(ring, remaining - k, var + 1, e, f);
    }
    e[var] = 0;
  }

  std::mt19937_64 rng_;
};

}  // namespace dgcd::testing
