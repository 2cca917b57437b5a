#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dgcd/rational.hpp"
#include "dgcd/ring.hpp"

namespace dgcd {

struct Term {
  Monomial monomial;
  BigRational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are kept sorted in strictly descending
/// ring order with no zero coefficients, so structural equality is equality
/// of polynomials.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  /// Canonicalizes an arbitrary term list (any order, repeats, zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, BigRational c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, BigRational c = 1);

  const RingPtr& ring() const { return ring_; }
  std::size_t arity() const { return ring_->arity(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant coefficient (zero when absent).
  BigRational constant_term() const;

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const BigRational& leading_coefficient() const { return leading_term().coefficient; }
  const Monomial& leading_monomial() const { return leading_term().monomial; }

  /// -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const BigRational& c) { return p *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial p) { return p *= c; }

  Polynomial pow(unsigned exponent) const;

  /// Multiplies by the monomial m (coefficient 1).
  Polynomial shifted(const Monomial& m) const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Formal partial derivative with respect to variable `var_index` (0-based).
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

/// Substitutes fs[i] for the i-th variable of w's ring. All fs share a ring,
/// which becomes the ring of the result.
Polynomial compose(const Polynomial& w, std::span<const Polynomial> fs);

BigRational evaluate(const Polynomial& p, std::span<const BigRational> point);

/// Canonical representative of the associate class of p: integer
/// coefficients with content 1 and positive leading coefficient.
Polynomial normalize_associate(const Polynomial& p);

/// The unit c with p == c * normalize_associate(p); zero for p == 0.
BigRational rational_content(const Polynomial& p);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single nonzero divisor with respect to the
/// ring's monomial order. The remainder is the unique normal form of
/// `dividend` modulo the principal ideal (divisor).
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<Polynomial> exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

/// Like exact_quotient but throws when the division is not exact.
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

bool divides(const Polynomial& divisor, const Polynomial& dividend);

/// Coefficients of p viewed as a univariate polynomial in `var`; entry i is
/// the coefficient of var^i, as a polynomial free of `var` in the same ring.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

/// Inverse of coefficients_in.
Polynomial from_coefficients(const RingPtr& ring, std::span<const Polynomial> coeffs,
                             std::size_t var);

/// Leading coefficient of p in `var` (a polynomial free of `var`).
Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var);

}  // namespace dgcd
