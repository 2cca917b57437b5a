#include "dgcd/jacobian.hpp"

#include "dgcd/gcd.hpp"

namespace dgcd {

PolynomialSystem::PolynomialSystem(std::vector<Polynomial> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error("polynomial system needs at least one member");
  ring_ = members_.front().ring();
  for (const auto& f : members_) {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  }
  if (members_.size() > ring_->arity()) {
    throw Error("polynomial system has " + std::to_string(members_.size()) + " members but only " +
                std::to_string(ring_->arity()) + " variables");
  }
}

bool PolynomialSystem::operator==(const PolynomialSystem& other) const {
  return same_ring(ring_, other.ring_) && members_ == other.members_;
}

namespace {

void check_square(const PolynomialMatrix& a) {
  if (a.empty()) throw Error("determinant of an empty matrix");
  for (const auto& row : a) {
    if (row.size() != a.size()) throw Error("determinant of a non-square matrix");
  }
}

Polynomial cofactor(const PolynomialMatrix& a, std::vector<std::size_t>& cols, std::size_t row) {
  const RingPtr& ring = a.front().front().ring();
  if (row == a.size()) return Polynomial::constant(ring, 1);
  Polynomial sum(ring);
  bool negative = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& entry = a[row][cols[k]];
    if (!entry.is_zero()) {
      std::size_t c = cols[k];
      cols.erase(cols.begin() + static_cast<long>(k));
      Polynomial term = entry * cofactor(a, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      if (negative) sum -= term;
      else sum += term;
    }
    negative = !negative;
  }
  return sum;
}

}  // namespace

Polynomial cofactor_determinant(const PolynomialMatrix& a) {
  check_square(a);
  std::vector<std::size_t> cols(a.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor(a, cols, 0);
}

Polynomial bareiss_determinant(PolynomialMatrix a) {
  check_square(a);
  const std::size_t n = a.size();
  const RingPtr& ring = a.front().front().ring();
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ring);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial determinant(const PolynomialMatrix& a) {
  return a.size() <= 4 ? cofactor_determinant(a) : bareiss_determinant(a);
}

PolynomialMatrix jacobian_matrix(const PolynomialSystem& sys) {
  PolynomialMatrix j;
  for (const auto& f : sys.members()) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < sys.arity(); ++v) row.push_back(partial_derivative(f, v));
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

Polynomial minor_of(const PolynomialMatrix& jac, std::span<const std::size_t> columns) {
  PolynomialMatrix sub;
  for (const auto& row : jac) {
    std::vector<Polynomial> r;
    for (auto c : columns) r.push_back(row[c]);
    sub.push_back(std::move(r));
  }
  return determinant(sub);
}

}  // namespace

Polynomial jacobian_minor(const PolynomialSystem& sys, std::span<const std::size_t> columns) {
  if (columns.size() != sys.size()) throw Error("minor needs exactly m columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] >= sys.arity()) throw Error("minor column out of range");
    if (i > 0 && columns[i] <= columns[i - 1]) throw Error("minor columns must be strictly increasing");
  }
  return minor_of(jacobian_matrix(sys), columns);
}

std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m > n) return out;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == n - m + k - 1) --k;
    if (k == 0) return out;
    ++idx[k - 1];
    for (std::size_t j = k; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

JacobianReport differential_gcd(const PolynomialSystem& sys) {
  JacobianReport report{sys.members(), {}, Polynomial(sys.ring()), false, false};
  PolynomialMatrix jac = jacobian_matrix(sys);
  std::vector<Polynomial> nonzero;
  for (auto& cols : column_subsets(sys.arity(), sys.size())) {
    Polynomial value = minor_of(jac, cols);
    if (!value.is_zero()) nonzero.push_back(value);
    report.minors.push_back({std::move(cols), std::move(value)});
  }
  if (!nonzero.empty()) report.dgcd = gcd_many(nonzero);
  report.algebraically_independent = !report.dgcd.is_zero();
  report.dgcd_is_nonzero_constant = report.algebraically_independent && report.dgcd.is_constant();
  return report;
}

bool is_generalized_jacobian_condition(const PolynomialSystem& sys) {
  return differential_gcd(sys).dgcd_is_nonzero_constant;
}

Polynomial apply_derivation(const DerivationSpec& d, const Polynomial& p) {
  if (d.coefficients.size() != p.arity()) throw Error("derivation arity does not match the polynomial");
  Polynomial out(p.ring());
  for (std::size_t j = 0; j < p.arity(); ++j) {
    if (!same_ring(d.coefficients[j].ring(), p.ring())) throw RingMismatch();
    if (d.coefficients[j].is_zero() || !p.involves(j)) continue;
    out += d.coefficients[j] * partial_derivative(p, j);
  }
  return out;
}

bool annihilates_generators(const DerivationSpec& d, const PolynomialSystem& sys) {
  for (const auto& f : sys.members()) {
    if (!apply_derivation(d, f).is_zero()) return false;
  }
  return true;
}

PolynomialSystem weighted_monomial_system(std::size_t n, std::size_t m) {
  if (m < 1 || m >= n || n < 2) throw Error("weighted monomial system needs 1 <= m < n");
  RingPtr ring = make_indexed_ring("x", n);
  std::vector<Monomial::Exponent> e(n, 0);
  e[0] = 2;
  e[1] = 1;
  std::vector<Polynomial> fs{Polynomial::monomial(ring, Monomial(e))};
  for (std::size_t i = 2; i <= m; ++i) fs.push_back(Polynomial::variable(ring, i));
  return PolynomialSystem(std::move(fs));
}

std::vector<DerivationSpec> weighted_monomial_derivations(std::size_t n, std::size_t m) {
  PolynomialSystem sys = weighted_monomial_system(n, m);
  const RingPtr& ring = sys.ring();
  std::vector<DerivationSpec> out;
  DerivationSpec euler{std::vector<Polynomial>(n, Polynomial(ring))};
  euler.coefficients[0] = Polynomial::variable(ring, 0);
  euler.coefficients[1] = Polynomial::variable(ring, 1) * BigRational(-2);
  out.push_back(std::move(euler));
  for (std::size_t j = m + 1; j < n; ++j) {
    DerivationSpec d{std::vector<Polynomial>(n, Polynomial(ring))};
    d.coefficients[j] = Polynomial::constant(ring, 1);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace dgcd
