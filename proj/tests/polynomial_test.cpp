#include "dgcd/polynomial.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

namespace dgcd {
namespace {

using testing::P;
using testing::PolyGen;

class PolynomialTest : public ::testing::Test {
 protected:
  RingPtr xy = make_ring({"x", "y"});
  RingPtr x123 = make_indexed_ring("x", 3);
};

TEST_F(PolynomialTest, AddCancels) {
  EXPECT_EQ(add(P(xy, "x + 1"), P(xy, "x - 1")), P(xy, "2*x"));
  Polynomial p = P(xy, "x^2*y - 3*y + 7");
  EXPECT_EQ(add(p, Polynomial(xy)), p);
  EXPECT_TRUE(add(P(xy, "x^2*y"), P(xy, "-x^2*y")).is_zero());
  EXPECT_TRUE(add(P(xy, "x^2*y"), P(xy, "-x^2*y")).terms().empty());
}

TEST_F(PolynomialTest, Multiply) {
  EXPECT_EQ(mul(P(xy, "x + y"), P(xy, "x - y")), P(xy, "x^2 - y^2"));
  Polynomial p = P(xy, "3*x*y - 1/2");
  EXPECT_EQ(mul(p, Polynomial::constant(xy, 1)), p);
  EXPECT_EQ(mul(P(xy, "x"), P(xy, "x^2")), P(xy, "x^3"));
}

TEST_F(PolynomialTest, RingMismatchIsAnError) {
  RingPtr other = make_ring({"x", "z"});
  EXPECT_THROW(add(P(xy, "x"), P(other, "x")), RingMismatch);
  EXPECT_THROW(mul(P(xy, "x"), P(other, "x")), RingMismatch);
  // structurally identical rings are interchangeable
  EXPECT_NO_THROW(add(P(xy, "x"), P(make_ring({"x", "y"}), "y")));
}

TEST_F(PolynomialTest, PartialDerivatives) {
  Polynomial f = P(x123, "x1^2*x2");
  EXPECT_EQ(partial_derivative(f, 0), P(x123, "2*x1*x2"));
  EXPECT_EQ(partial_derivative(f, 1), P(x123, "x1^2"));
  EXPECT_TRUE(partial_derivative(P(x123, "5/3"), 2).is_zero());
  EXPECT_THROW(partial_derivative(f, 3), Error);
}

TEST_F(PolynomialTest, Compose) {
  RingPtr y1 = make_indexed_ring("y", 1);
  RingPtr y12 = make_indexed_ring("y", 2);
  RingPtr x1 = make_ring({"x"});
  std::vector<Polynomial> f1{P(x123, "x1^2*x2")};
  EXPECT_EQ(compose(P(y1, "y1"), f1), P(x123, "x1^2*x2"));
  std::vector<Polynomial> f2{P(x1, "x + 1")};
  EXPECT_EQ(compose(P(y1, "y1^2"), f2), P(x1, "x^2 + 2*x + 1"));
  std::vector<Polynomial> f3{P(xy, "x"), P(xy, "y")};
  EXPECT_EQ(compose(P(y12, "y1*y2 - 1"), f3), P(xy, "x*y - 1"));
  EXPECT_THROW(compose(P(y12, "y1"), f1), Error);
}

TEST_F(PolynomialTest, Evaluate) {
  std::vector<BigRational> pt{2, 3};
  EXPECT_EQ(evaluate(P(xy, "x^2*y"), pt), 12);
  EXPECT_EQ(evaluate(Polynomial(xy), pt), 0);
  std::vector<BigRational> half{BigRational(1, 2), BigRational(1, 2)};
  EXPECT_EQ(evaluate(P(xy, "x + y"), half), 1);
  std::vector<BigRational> short_pt{1};
  EXPECT_THROW(evaluate(P(xy, "x"), short_pt), Error);
}

// Independent oracle: scale to integers by the lcm of denominators, divide by
// the gcd of the resulting integers, fix the sign of the leading term.
Polynomial content_oracle(const Polynomial& p) {
  long lcm = 1;
  for (const auto& t : p.terms()) lcm = std::lcm(lcm, t.coefficient.get_den().get_si());
  long g = 0;
  for (const auto& t : p.terms()) {
    BigRational scaled = t.coefficient * lcm;
    g = std::gcd(g, std::abs(scaled.get_num().get_si()));
  }
  std::vector<Term> out;
  long sign = p.leading_coefficient() < 0 ? -1 : 1;
  for (const auto& t : p.terms()) out.push_back({t.monomial, t.coefficient * lcm / g * sign});
  return Polynomial::from_terms(p.ring(), std::move(out));
}

TEST_F(PolynomialTest, NormalizeAssociate) {
  EXPECT_EQ(normalize_associate(P(x123, "-3/2*x1")), P(x123, "x1"));
  Polynomial p = P(xy, "4*x^2 + 6*y");
  EXPECT_EQ(normalize_associate(p), content_oracle(p));
  EXPECT_EQ(normalize_associate(p), P(xy, "2*x^2 + 3*y"));
  EXPECT_TRUE(normalize_associate(Polynomial(xy)).is_zero());
  EXPECT_EQ(normalize_associate(P(xy, "-2/3*x + 4/9")), P(xy, "3*x - 2"));
}

TEST_F(PolynomialTest, MonomialOrders) {
  // grevlex: x*y^2 vs x^2*z in 3 vars -> same degree, last variable z decides
  RingPtr g = make_ring({"x", "y", "z"});
  EXPECT_EQ(P(g, "x^2*z + x*y^2").leading_monomial(), P(g, "x*y^2").leading_monomial());
  RingPtr lex = make_ring({"x", "y", "z"}, MonomialOrder::Lex);
  EXPECT_EQ(P(lex, "x^2*z + x*y^2").leading_monomial(), P(lex, "x^2*z").leading_monomial());
  EXPECT_EQ(P(lex, "x + y^5").leading_monomial(), P(lex, "x").leading_monomial());
  RingPtr deglex = make_ring({"x", "y", "z"}, MonomialOrder::GradedLex);
  EXPECT_EQ(P(deglex, "x + y^5").leading_monomial(), P(deglex, "y^5").leading_monomial());
}

TEST_F(PolynomialTest, DivisionByOneDivisor) {
  Polynomial f = P(xy, "x^3*y + x*y^2 + 1");
  Polynomial g = P(xy, "x*y - 1");
  auto [q, r] = divide(f, g);
  EXPECT_EQ(q * g + r, f);
  // no term of the remainder is divisible by the leading monomial of g
  for (const auto& t : r.terms()) EXPECT_FALSE(g.leading_monomial().divides(t.monomial));
  EXPECT_EQ(exact_quotient(P(xy, "x^2 - y^2"), P(xy, "x - y")), P(xy, "x + y"));
  EXPECT_FALSE(exact_quotient(P(xy, "x^2 + y^2"), P(xy, "x - y")).has_value());
  EXPECT_THROW(divide(f, Polynomial(xy)), Error);
}

TEST_F(PolynomialTest, RecursiveView) {
  Polynomial f = P(x123, "x1^2*x2 + 3*x1*x3 - x2 + 4");
  auto coeffs = coefficients_in(f, 0);
  ASSERT_EQ(coeffs.size(), 3u);
  EXPECT_EQ(coeffs[2], P(x123, "x2"));
  EXPECT_EQ(coeffs[1], P(x123, "3*x3"));
  EXPECT_EQ(coeffs[0], P(x123, "-x2 + 4"));
  EXPECT_EQ(from_coefficients(x123, coeffs, 0), f);
  EXPECT_EQ(leading_coefficient_in(f, 0), P(x123, "x2"));
}

// ---------------------------------------------------------------------------
// Properties on seeded random samples

TEST_F(PolynomialTest, RingAxioms) {
  PolyGen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = gen.poly(x123, 3, 5, 0.4, true);
    Polynomial b = gen.poly(x123, 3, 5, 0.4, true);
    Polynomial c = gen.poly(x123, 2, 5, 0.4, true);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_F(PolynomialTest, LeibnizRule) {
  PolyGen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = gen.poly(x123, 3, 5, 0.4, true);
    Polynomial q = gen.poly(x123, 3, 5, 0.4, true);
    auto i = static_cast<std::size_t>(gen.integer(0, 2));
    EXPECT_EQ(partial_derivative(p * q, i),
              partial_derivative(p, i) * q + p * partial_derivative(q, i));
  }
}

TEST_F(PolynomialTest, ChainRule) {
  PolyGen gen(13);
  RingPtr ys = make_indexed_ring("y", 2);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial w = gen.poly(ys, 3, 4, 0.5);
    std::vector<Polynomial> fs{gen.poly(x123, 2, 4, 0.5), gen.poly(x123, 2, 4, 0.5)};
    for (std::size_t j = 0; j < 3; ++j) {
      Polynomial rhs(x123);
      for (std::size_t i = 0; i < 2; ++i) {
        rhs += compose(partial_derivative(w, i), fs) * partial_derivative(fs[i], j);
      }
      EXPECT_EQ(partial_derivative(compose(w, fs), j), rhs);
    }
  }
}

TEST_F(PolynomialTest, NormalizeIsConstantOnAssociateClasses) {
  PolyGen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = gen.nonzero_poly(x123, 3, 9, 0.4);
    BigRational c = gen.rational(7);
    if (c == 0) c = -5;
    Polynomial n = normalize_associate(p);
    EXPECT_EQ(normalize_associate(n), n);
    EXPECT_EQ(normalize_associate(p * c), n);
    EXPECT_EQ(n, content_oracle(p));
    EXPECT_EQ(rational_content(p) * n, p);
  }
}

TEST_F(PolynomialTest, EvaluateIsARingHomomorphism) {
  PolyGen gen(15);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = gen.poly(x123, 3, 5, 0.5, true);
    Polynomial q = gen.poly(x123, 3, 5, 0.5, true);
    std::vector<BigRational> pt{gen.rational(4), gen.rational(4), gen.rational(4)};
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
  }
}

TEST_F(PolynomialTest, DivisionIdentityOnRandomInputs) {
  PolyGen gen(16);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f = gen.poly(x123, 4, 6, 0.4);
    Polynomial g = gen.nonzero_poly(x123, 2, 6, 0.5);
    auto [q, r] = divide(f, g);
    EXPECT_EQ(q * g + r, f);
    for (const auto& t : r.terms()) EXPECT_FALSE(g.leading_monomial().divides(t.monomial));
    EXPECT_EQ(exact_quotient(f * g, g), f);
  }
}

}  // namespace
}  // namespace dgcd
