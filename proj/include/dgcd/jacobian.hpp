#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgcd/polynomial.hpp"

namespace dgcd {

/// m polynomials in n variables with 1 <= m <= n.
class PolynomialSystem {
 public:
  /// Throws if the list is empty, longer than the arity or mixes rings.
  explicit PolynomialSystem(std::vector<Polynomial> members);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t arity() const { return ring_->arity(); }

  bool operator==(const PolynomialSystem& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> members_;
};

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Cofactor expansion along the first row.
Polynomial cofactor_determinant(const PolynomialMatrix& a);
/// Fraction-free Gaussian elimination with exact divisions.
Polynomial bareiss_determinant(PolynomialMatrix a);
/// Cofactor expansion up to 4x4, Bareiss above.
Polynomial determinant(const PolynomialMatrix& a);

/// The m x n matrix of partial derivatives d f_a / d x_j.
PolynomialMatrix jacobian_matrix(const PolynomialSystem& sys);

/// Determinant of the columns (0-based, strictly increasing) of the Jacobian.
Polynomial jacobian_minor(const PolynomialSystem& sys, std::span<const std::size_t> columns);

/// All m-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t m);

struct JacobianMinor {
  std::vector<std::size_t> columns;  // 0-based
  Polynomial value;

  bool operator==(const JacobianMinor&) const = default;
};

struct JacobianReport {
  std::vector<Polynomial> members;
  std::vector<JacobianMinor> minors;
  /// gcd of the nonzero minors in canonical form; zero when every minor vanishes.
  Polynomial dgcd;
  bool dgcd_is_nonzero_constant = false;
  bool algebraically_independent = false;

  bool operator==(const JacobianReport&) const = default;
};

JacobianReport differential_gcd(const PolynomialSystem& sys);

/// dgcd is a nonzero constant.
bool is_generalized_jacobian_condition(const PolynomialSystem& sys);

/// A derivation given by its values on the variables.
struct DerivationSpec {
  std::vector<Polynomial> coefficients;
};

/// sum_j coefficients[j] * dp/dx_j
Polynomial apply_derivation(const DerivationSpec& d, const Polynomial& p);
bool annihilates_generators(const DerivationSpec& d, const PolynomialSystem& sys);

/// (x1^2*x2, x3, ..., x_{m+1}) in n variables, 1 <= m < n.
PolynomialSystem weighted_monomial_system(std::size_t n, std::size_t m);
/// x1*d/dx1 - 2*x2*d/dx2 together with d/dx_j for j = m+2, ..., n. Each one
/// kills every member of weighted_monomial_system(n, m).
std::vector<DerivationSpec> weighted_monomial_derivations(std::size_t n, std::size_t m);

}  // namespace dgcd
