#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgcd/polynomial.hpp"

namespace dgcd {

struct IrreducibilityLimits {
  int max_total_degree = 8;
  std::size_t max_variables = 3;
  /// Largest absolute coefficient after normalize_associate.
  BigInteger max_height = 1000000;
  /// Candidate divisors tried during recombination before giving up.
  std::size_t max_candidates = 1U << 16;
};

enum class Irreducibility { Irreducible, Reducible, Unknown };

std::string to_string(Irreducibility s);

struct IrreducibilityVerdict {
  Irreducibility status = Irreducibility::Unknown;
  /// Reducible only: non-constant b, c with b*c associate to the input.
  std::optional<Polynomial> left;
  std::optional<Polynomial> right;
  /// Unknown only.
  std::string reason;

  bool irreducible() const { return status == Irreducibility::Irreducible; }
  bool reducible() const { return status == Irreducibility::Reducible; }
};

/// Exact over Q within the limits. Cheap structural splits (a variable
/// divides p, nonconstant content in some variable, a repeated factor) are
/// reported regardless of the limits. Otherwise the polynomial is mapped to
/// one variable by Kronecker substitution, the image is factored over Z and
/// every product of image factors is decoded and trial-divided.
/// Throws on zero or constant input.
IrreducibilityVerdict is_irreducible(const Polynomial& p, const IrreducibilityLimits& limits = {});

/// Irreducible factors in canonical form, repeated by multiplicity, ordered
/// by total degree then printed form. Empty optional when some step is
/// Unknown. Throws on zero or constant input.
std::optional<std::vector<Polynomial>> irreducible_factors(const Polynomial& p,
                                                           const IrreducibilityLimits& limits = {});

}  // namespace dgcd
