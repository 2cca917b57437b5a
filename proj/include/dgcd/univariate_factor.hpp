#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dgcd/rational.hpp"

namespace dgcd::univariate {

/// Dense integer polynomial; entry i is the coefficient of t^i. Canonical
/// values have no trailing zeros (the zero polynomial is empty).
using ZPoly = std::vector<BigInteger>;

void trim(ZPoly& f);
long degree(const ZPoly& f);
ZPoly multiply(const ZPoly& a, const ZPoly& b);
/// a / b when b divides a exactly over Z, otherwise false.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);
BigInteger content(const ZPoly& f);

/// Thrown when recombination would exceed its candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Factorization {
  /// Signed integer content.
  BigInteger unit;
  /// Irreducible, primitive, positive leading coefficient; with multiplicity.
  std::vector<std::pair<ZPoly, unsigned>> factors;
};

struct FactorOptions {
  /// Maximum number of recombination candidates tried per square-free part.
  std::size_t max_candidates = 1U << 16;
  /// Number of good primes examined before choosing one to lift.
  unsigned primes_to_try = 5;
};

/// Complete factorization over Z of a nonzero polynomial: square-free
/// decomposition, factorization modulo a small prime, Hensel lifting and
/// exhaustive recombination of the lifted factors.
Factorization factor(const ZPoly& f, const FactorOptions& options = {});

/// Factorization of a primitive square-free polynomial with positive
/// leading coefficient into irreducibles (no multiplicities).
std::vector<ZPoly> factor_squarefree(const ZPoly& f, const FactorOptions& options = {});

// Arithmetic over F_p, exposed for testing.
namespace fp {

using Poly = std::vector<std::uint64_t>;

Poly reduce(const ZPoly& f, std::uint64_t p);
Poly multiply(const Poly& a, const Poly& b, std::uint64_t p);
Poly remainder(Poly a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// Monic irreducible factors of a square-free polynomial over F_p, p odd.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::uint64_t seed = 1);

}  // namespace fp

}  // namespace dgcd::univariate
