#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgcd/polynomial.hpp"

namespace dgcd {

/// Pairwise non-associated irreducible elements of the ambient ring.
class FactorBase {
 public:
  /// Throws on an empty list, a constant, a provably reducible element or two
  /// associated elements.
  FactorBase(RingPtr ring, std::vector<Polynomial> primes);

  /// The variables of the ring.
  static FactorBase variables(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> primes_;
};

/// unit * prod(primes[i]^exponents[i]).
struct FactoredElement {
  BigRational unit = 1;
  std::vector<unsigned> exponents;

  unsigned total() const;
  bool is_unit() const { return total() == 0; }
  Polynomial expand(const FactorBase& base) const;

  bool operator==(const FactoredElement&) const = default;
};

/// Writes p over the base, or nullopt when p does not factor over it.
std::optional<FactoredElement> factor_over_base(const Polynomial& p, const FactorBase& base);

/// The ambient ring itself, or the monomial algebra spanned by x^a for a in
/// the affine semigroup generated by nonzero exponent vectors.
class SubringSpec {
 public:
  enum class Kind { AmbientRing, MonomialSemigroup };

  static SubringSpec ambient(RingPtr ring);
  /// Throws on a zero generator or wrong arity.
  static SubringSpec monomial_semigroup(RingPtr ring, std::vector<std::vector<unsigned>> generators);
  /// Generators given as monomials, e.g. "t^2", "t^3". Throws unless each is
  /// a single non-constant term.
  static SubringSpec from_monomials(RingPtr ring, const std::vector<Polynomial>& generators);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<unsigned>>& generators() const { return generators_; }
  std::string describe() const;

 private:
  SubringSpec(Kind kind, RingPtr ring, std::vector<std::vector<unsigned>> gens)
      : kind_(kind), ring_(std::move(ring)), generators_(std::move(gens)) {}

  Kind kind_;
  RingPtr ring_;
  std::vector<std::vector<unsigned>> generators_;
};

/// Semigroup membership of one exponent vector.
bool semigroup_contains(const std::vector<std::vector<unsigned>>& generators, const std::vector<unsigned>& v);

bool subring_contains(const SubringSpec& r, const Polynomial& p);

/// Units of R and A agree; always true for a constructed spec.
bool units_equal(const SubringSpec& r);

/// All exponent vectors with sum <= bound, by sum then lexicographically,
/// each with unit 1 then -1. With `r`, only members of r are kept.
std::vector<FactoredElement> enumerate_elements(const FactorBase& base, unsigned bound,
                                                const SubringSpec* r = nullptr);

/// Throws when a is a unit or not in R.
bool is_irreducible_in_R(const SubringSpec& r, const FactoredElement& a, const FactorBase& base);
/// Throws when a is not in R.
bool is_squarefree_in_R(const SubringSpec& r, const FactoredElement& a, const FactorBase& base);

enum class ClosureProperty {
  IrrRSubIrrA,
  SqfRSubSqfA,
  IrrRSubSqfA,
  FactoriallyClosed,
  SquareFactoriallyClosed,
  RootClosed,
  Saturation,
};

std::string to_string(ClosureProperty p);
ClosureProperty parse_closure_property(const std::string& s);

/// Holds up to `bound` (evidence only) or fails with a definitive witness.
/// Witness layout: containments [a]; factorially closed [x, y] with xy in R;
/// square-factorially closed [x, y] with x^2*y in R; root closed [x] with
/// x^power in R; saturation [x, y] with x and xy in R.
struct ClosureVerdict {
  ClosureProperty property = ClosureProperty::Saturation;
  bool holds = true;
  unsigned bound = 0;
  std::vector<FactoredElement> witness;
  unsigned power = 0;

  bool operator==(const ClosureVerdict&) const = default;
};

ClosureVerdict check_containment(const SubringSpec& r, ClosureProperty property, unsigned bound,
                                 const FactorBase& base);
ClosureVerdict check_factorially_closed(const SubringSpec& r, unsigned bound, const FactorBase& base);
ClosureVerdict check_square_factorially_closed(const SubringSpec& r, unsigned bound, const FactorBase& base);
ClosureVerdict check_root_closed(const SubringSpec& r, unsigned bound, unsigned max_power, const FactorBase& base);
ClosureVerdict check_saturation(const SubringSpec& r, unsigned bound, const FactorBase& base);

/// Re-checks a failure witness on expanded polynomials, using the gcd and
/// factorization engine for square-freeness and irreducibility in A.
bool reverify_witness(const SubringSpec& r, const ClosureVerdict& v, const FactorBase& base);

struct AuditFinding {
  std::string rule;
  std::string detail;

  bool operator==(const AuditFinding&) const = default;
};

struct ClosureReport {
  std::vector<std::string> ambient_variables;
  std::vector<std::vector<unsigned>> generators;  // empty for the ambient ring
  std::vector<Polynomial> base;
  unsigned bound = 0;
  unsigned max_power = 0;
  bool units_equal = true;
  /// One verdict per ClosureProperty, in declaration order.
  std::vector<ClosureVerdict> verdicts;
  /// Rules whose premise was met and whose conclusion was checked.
  std::vector<std::string> rules_checked;
  std::vector<AuditFinding> findings;

  bool audit_clean() const { return findings.empty(); }
  const ClosureVerdict& verdict(ClosureProperty p) const;

  bool operator==(const ClosureReport&) const = default;
};

/// Runs every checker, then asserts that each failure forces the failures it
/// implies: irr-in-sqf -> sqf-in-sqf -> irr-in-irr, irr-in-irr <-> factorially
/// closed, and, when saturation holds at the budget, sqf-in-sqf <-> square
/// factorially closed and root closed -> square factorially closed. Each
/// conclusion is re-checked at a budget computed from the premise witness.
ClosureReport audit_implications(const SubringSpec& r, unsigned bound, unsigned max_power, const FactorBase& base);

}  // namespace dgcd
