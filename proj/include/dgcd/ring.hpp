#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgcd/rational.hpp"

namespace dgcd {

/// Exponent vector x^a of a monomial; its length is the arity of the ring.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1) {
    Monomial m(arity);
    m.exps_.at(index) = power;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }
  /// a / b; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

enum class MonomialOrder {
  GradedReverseLex,
  GradedLex,
  Lex,
};

/// Three-way comparison of monomials under the given order (greater = leading).
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

std::string to_string(MonomialOrder order);
std::optional<MonomialOrder> parse_monomial_order(std::string_view name);

/// The ambient polynomial ring Q[x_1, ..., x_n]: variable names and the
/// monomial order that fixes canonical term order.
class RingContext {
 public:
  RingContext(std::vector<std::string> variable_names,
              MonomialOrder order = MonomialOrder::GradedReverseLex);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(std::size_t i) const { return names_.at(i); }
  MonomialOrder order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return dgcd::compare(a, b, order_);
  }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.order_ == b.order_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> variable_names,
                  MonomialOrder order = MonomialOrder::GradedReverseLex);

/// Ring with variables prefix1, ..., prefixN.
RingPtr make_indexed_ring(std::string_view prefix, std::size_t arity,
                          MonomialOrder order = MonomialOrder::GradedReverseLex);

bool is_valid_identifier(std::string_view name);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
  using Error::Error;
};

}  // namespace dgcd
