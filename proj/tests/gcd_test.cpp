#include "dgcd/gcd.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dgcd {
namespace {

using testing::P;
using testing::PolyGen;

class GcdTest : public ::testing::Test {
 protected:
  RingPtr x123 = make_indexed_ring("x", 3);
  RingPtr xy = make_ring({"x", "y"});
  RingPtr xyz = make_ring({"x", "y", "z"});
  RingPtr x = make_ring({"x"});
};

TEST_F(GcdTest, Examples) {
  EXPECT_EQ(gcd(P(x123, "2*x1*x2"), P(x123, "x1^2")), P(x123, "x1"));
  Polynomial p = P(xy, "-6*x^2 + 4/3*y");
  EXPECT_EQ(gcd(p, Polynomial(xy)), normalize_associate(p));
  EXPECT_EQ(gcd(Polynomial(xy), p), normalize_associate(p));
  EXPECT_TRUE(gcd(Polynomial(xy), Polynomial(xy)).is_zero());
  // x^2 - y^2 = (x - y)(x + y), x^2 + 2xy + y^2 = (x + y)^2
  EXPECT_EQ(gcd(P(xy, "x^2 - y^2"), P(xy, "x^2 + 2*x*y + y^2")), P(xy, "x + y"));
  EXPECT_EQ(gcd(P(xy, "6"), P(xy, "4*x")), P(xy, "1"));
  EXPECT_EQ(gcd(P(x, "x^4 - 1"), P(x, "x^6 - 1")), P(x, "x^2 - 1"));
  EXPECT_THROW(gcd(P(xy, "x"), P(x, "x")), RingMismatch);
}

TEST_F(GcdTest, HarderCommonFactors) {
  Polynomial f = P(xyz, "x*y - z^2 + 3");
  Polynomial g = P(xyz, "x^2*z + y^3 - 1");
  Polynomial h = P(xyz, "y*z + x - 2");
  EXPECT_EQ(gcd(f * g * g, f * h * g), normalize_associate(f * g));
  EXPECT_EQ(gcd(f.pow(3) * h, f.pow(2) * g), normalize_associate(f.pow(2)));
  EXPECT_TRUE(gcd(g * h, f * f).is_constant());
}

TEST_F(GcdTest, GcdMany) {
  std::vector<Polynomial> remark{P(x123, "2*x1*x2"), P(x123, "x1^2")};
  EXPECT_EQ(gcd_many(remark), P(x123, "x1"));
  std::vector<Polynomial> zeros{Polynomial(xy), Polynomial(xy), Polynomial(xy)};
  EXPECT_TRUE(gcd_many(zeros).is_zero());
  std::vector<Polynomial> coprime{P(xy, "x"), P(xy, "y"), P(xy, "x + y")};
  EXPECT_EQ(gcd_many(coprime), P(xy, "1"));
  EXPECT_THROW(gcd_many(std::vector<Polynomial>{}), Error);
}

TEST_F(GcdTest, SquarefreeTests) {
  EXPECT_FALSE(is_squarefree(P(x123, "x1^2*x2")));
  EXPECT_TRUE(is_squarefree(P(xy, "x*y*(x + y)")));
  EXPECT_TRUE(is_squarefree(P(xy, "-7")));
  EXPECT_THROW(is_squarefree(Polynomial(xy)), Error);
  // repeated factor that involves every variable
  EXPECT_FALSE(is_squarefree(P(xyz, "(x*y + z)^2*(x - 1)")));
}

TEST_F(GcdTest, SquarefreePart) {
  EXPECT_EQ(squarefree_part(P(x123, "x1^2*x2")), P(x123, "x1*x2"));
  Polynomial sf = P(xy, "-2*x*y + 4*y^3");
  EXPECT_EQ(squarefree_part(sf), normalize_associate(sf));
  EXPECT_EQ(squarefree_part(P(xy, "(x + y)^3")), P(xy, "x + y"));
  EXPECT_THROW(squarefree_part(P(xy, "3")), Error);
  EXPECT_THROW(squarefree_part(Polynomial(xy)), Error);
}

TEST_F(GcdTest, SquarefreeDecompositionExamples) {
  auto d = squarefree_decomposition(P(x123, "x1^2*x2"));
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].multiplicity, 1u);
  EXPECT_EQ(d.parts[0].factor, P(x123, "x2"));
  EXPECT_EQ(d.parts[1].multiplicity, 2u);
  EXPECT_EQ(d.parts[1].factor, P(x123, "x1"));

  Polynomial sf = P(xy, "3*x^2 - 6*y");
  d = squarefree_decomposition(sf);
  ASSERT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.parts[0].multiplicity, 1u);
  EXPECT_EQ(d.parts[0].factor, normalize_associate(sf));
  EXPECT_EQ(d.unit, 3);

  d = squarefree_decomposition(P(x, "(x + 1)^2*(x - 1)^2"));
  ASSERT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.parts[0].multiplicity, 2u);
  EXPECT_EQ(d.parts[0].factor, P(x, "x^2 - 1"));

  EXPECT_THROW(squarefree_decomposition(P(x, "5")), Error);
}

TEST_F(GcdTest, DecompositionMixesContentAndPrimitiveParts) {
  // y^3 is content with respect to x; (x + y)^2 and (x - y^2) are primitive
  Polynomial p = P(xy, "-2*y^3*(x + y)^2*(x - y^2)");
  auto d = squarefree_decomposition(p);
  EXPECT_EQ(d.expand(), p);
  ASSERT_EQ(d.parts.size(), 3u);
  EXPECT_EQ(d.parts[0].factor, P(xy, "y^2 - x"));
  EXPECT_EQ(d.parts[1].factor, P(xy, "x + y"));
  EXPECT_EQ(d.parts[2].factor, P(xy, "y"));
  EXPECT_EQ(d.parts[2].multiplicity, 3u);
}

// ---------------------------------------------------------------------------
// Properties

TEST_F(GcdTest, GcdOfCommonMultiples) {
  PolyGen gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = gen.nonzero_poly(xyz, 2, 5, 0.4);
    Polynomial g = gen.nonzero_poly(xyz, 2, 5, 0.4);
    Polynomial h = gen.nonzero_poly(xyz, 2, 5, 0.4);
    Polynomial lhs = gcd(f * g, f * h);
    EXPECT_EQ(lhs, normalize_associate(f * gcd(g, h)));
    EXPECT_TRUE(divides(lhs, f * g));
    EXPECT_TRUE(divides(lhs, f * h));
  }
}

TEST_F(GcdTest, GcdIsCommutativeAndAssociateInvariant) {
  PolyGen gen(32);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = gen.nonzero_poly(xy, 3, 5, 0.5);
    Polynomial b = gen.nonzero_poly(xy, 3, 5, 0.5);
    Polynomial g = gcd(a, b);
    EXPECT_EQ(g, gcd(b, a));
    EXPECT_EQ(g, gcd(a * BigRational(-3, 7), b));
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
  }
}

TEST_F(GcdTest, DecompositionReconstructsAndAgreesWithSquarefreeTest) {
  PolyGen gen(33);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = gen.nonconstant_poly(xyz, 2, 4, 0.4);
    Polynomial b = gen.nonconstant_poly(xyz, 1, 4, 0.6);
    auto k = static_cast<unsigned>(gen.integer(1, 3));
    Polynomial p = a * b.pow(k) * BigRational(static_cast<long>(gen.integer(1, 9)));
    auto d = squarefree_decomposition(p);
    EXPECT_EQ(d.expand(), p);
    bool all_one = true;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      EXPECT_TRUE(is_squarefree(d.parts[i].factor));
      EXPECT_FALSE(d.parts[i].factor.is_constant());
      if (d.parts[i].multiplicity != 1) all_one = false;
      for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(gcd(d.parts[i].factor, d.parts[j].factor).is_constant());
    }
    EXPECT_EQ(is_squarefree(p), all_one);
  }
}

TEST_F(GcdTest, WideCoefficientsAndHighDegrees) {
  // huge coefficients and dense trivariate products stress both gcd paths
  PolyGen gen(37);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = gen.nonconstant_poly(xyz, 3, 1000000, 0.5);
    Polynomial g = gen.nonzero_poly(xyz, 3, 5, 0.5), h = gen.nonzero_poly(xyz, 3, 5, 0.5);
    if (trial % 5 == 0) f *= P(xyz, "123456789012345678901234567890*x - 1");
    Polynomial d = gcd(f * g, f * h);
    EXPECT_EQ(d, normalize_associate(f * gcd(g, h)));
    EXPECT_TRUE(divides(d, f * g));
    EXPECT_TRUE(divides(d, f * h));
  }
  // coprime images at the first evaluation point still give 1
  EXPECT_EQ(gcd(P(xyz, "x^4 + y^4 + z^4 + 1"), P(xyz, "x^4 + y^4 + z^4 + 2")), P(xyz, "1"));
}

}  // namespace
}  // namespace dgcd
