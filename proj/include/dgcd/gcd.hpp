#pragma once

#include <span>
#include <vector>

#include "dgcd/polynomial.hpp"

namespace dgcd {

/// Greatest common divisor over Q in canonical associate form.
/// gcd(0, 0) = 0 and gcd(p, 0) = normalize_associate(p).
///
/// Works in Z[x] after clearing denominators and recurses on the variable of
/// smallest degree: content in the remaining variables times the gcd of the
/// primitive parts, the latter from a subresultant remainder sequence.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Left fold of gcd, stopping early once the accumulator is 1.
Polynomial gcd_many(std::span<const Polynomial> ps);

/// True iff p has no repeated non-constant factor. Decided by
/// gcd(p, dp/dx_1, ..., dp/dx_n) being constant, which is only valid in
/// characteristic zero.
bool is_squarefree(const Polynomial& p);

/// Product of the distinct irreducible factors of p, normalized.
Polynomial squarefree_part(const Polynomial& p);

struct SquarefreeDecomposition {
  /// p == unit * prod(factor^multiplicity)
  BigRational unit;
  struct Part {
    unsigned multiplicity;
    Polynomial factor;
  };
  /// Sorted by multiplicity; factors are normalized, square-free,
  /// non-constant and pairwise coprime.
  std::vector<Part> parts;

  Polynomial expand() const;
};

/// Yun-style decomposition. Requires a non-constant p.
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

/// Content of p with respect to `var`: gcd of its coefficients in `var`,
/// normalized.
Polynomial content_in(const Polynomial& p, std::size_t var);

}  // namespace dgcd
