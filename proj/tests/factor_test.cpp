#include "dgcd/factor.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "dgcd/gcd.hpp"
#include "dgcd/univariate_factor.hpp"
#include "test_support.hpp"

namespace dgcd {
namespace {

using testing::P;
using testing::PolyGen;
using univariate::ZPoly;

ZPoly Z(std::initializer_list<long> coeffs) {
  ZPoly f;
  for (long c : coeffs) f.emplace_back(c);
  return f;
}

ZPoly expand(const univariate::Factorization& fz) {
  ZPoly r{fz.unit};
  for (const auto& [f, m] : fz.factors) {
    for (unsigned i = 0; i < m; ++i) r = univariate::multiply(r, f);
  }
  return r;
}

TEST(UnivariateFactor, FiniteFieldSplitting) {
  // t^4 - 1 = (t - 1)(t + 1)(t - 2)(t + 2) over F_5
  auto fs = univariate::fp::factor_squarefree({4, 0, 0, 0, 1}, 5);
  ASSERT_EQ(fs.size(), 4u);
  for (const auto& f : fs) EXPECT_EQ(f.size(), 2u);
  // t^2 + 1 is irreducible over F_7
  EXPECT_EQ(univariate::fp::factor_squarefree({1, 0, 1}, 7).size(), 1u);
}

TEST(UnivariateFactor, KnownFactorizations) {
  // t^8 - 1 = (t - 1)(t + 1)(t^2 + 1)(t^4 + 1)
  auto fz = univariate::factor(Z({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 4u);
  EXPECT_EQ(fz.factors[3].first, Z({1, 0, 0, 0, 1}));
  EXPECT_EQ(expand(fz), Z({-1, 0, 0, 0, 0, 0, 0, 0, 1}));

  // irreducible over Z but splits modulo every prime
  EXPECT_EQ(univariate::factor(Z({1, 0, -10, 0, 1})).factors.size(), 1u);

  // -6 (2t + 1)^2 (t^2 - 3) t
  ZPoly f = univariate::multiply(univariate::multiply(Z({-6}), Z({1, 2})), Z({1, 2}));
  f = univariate::multiply(univariate::multiply(f, Z({-3, 0, 1})), Z({0, 1}));
  fz = univariate::factor(f);
  EXPECT_EQ(fz.unit, -6);
  EXPECT_EQ(fz.factors.size(), 3u);
  EXPECT_EQ(expand(fz), f);
}

TEST(UnivariateFactor, RandomProductsReconstruct) {
  PolyGen gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    ZPoly f{1};
    int pieces = static_cast<int>(gen.integer(1, 4));
    for (int i = 0; i < pieces; ++i) {
      ZPoly g;
      long d = gen.integer(1, 4);
      for (long k = 0; k <= d; ++k) g.emplace_back(static_cast<long>(gen.integer(-9, 9)));
      if (g.back() == 0) g.back() = 1;
      f = univariate::multiply(f, g);
    }
    auto fz = univariate::factor(f);
    EXPECT_EQ(expand(fz), f);
    EXPECT_GE(fz.factors.size(), 1u);
    for (const auto& [g, m] : fz.factors) {
      EXPECT_GT(g.back(), 0);
      EXPECT_EQ(univariate::content(g), 1);
    }
  }
}

class FactorTest : public ::testing::Test {
 protected:
  RingPtr x123 = make_indexed_ring("x", 3);
  RingPtr xy = make_ring({"x", "y"});
  RingPtr xyz = make_ring({"x", "y", "z"});
};

TEST_F(FactorTest, Examples) {
  auto v = is_irreducible(P(x123, "x1^2*x2"));
  ASSERT_TRUE(v.reducible());
  EXPECT_EQ(*v.left, P(x123, "x1"));
  EXPECT_EQ(*v.right, P(x123, "x1*x2"));

  EXPECT_TRUE(is_irreducible(P(xy, "x + y + 1")).irreducible());
  EXPECT_TRUE(is_irreducible(P(xy, "x^2 + y^2")).irreducible());
  EXPECT_THROW(is_irreducible(P(xy, "4")), Error);
  EXPECT_THROW(is_irreducible(Polynomial(xy)), Error);
}

TEST_F(FactorTest, KnownIrreducibles) {
  for (const char* s : {"y^2 - x^3", "x^2 + y^2 + z^2 - 1", "x^3 + y^3 + z^3", "x^2*y + y^2*z + z^2*x",
                        "x^4 + 1", "x^2 - 2*y^2", "1/2*x*y - 3"}) {
    EXPECT_TRUE(is_irreducible(P(xyz, s)).irreducible()) << s;
  }
}

TEST_F(FactorTest, ReducibleWithoutStructuralShortcut) {
  // no variable divides, content is trivial and the input is square-free
  Polynomial p = P(xyz, "(x*y + z + 1)*(x - y^2 + 2*z)");
  auto v = is_irreducible(p);
  ASSERT_TRUE(v.reducible());
  EXPECT_FALSE(v.left->is_constant());
  EXPECT_FALSE(v.right->is_constant());
  EXPECT_EQ(normalize_associate(*v.left * *v.right), normalize_associate(p));

  v = is_irreducible(P(xy, "x^4 - y^4"));
  ASSERT_TRUE(v.reducible());
}

TEST_F(FactorTest, CapsGiveUnknown) {
  auto v = is_irreducible(P(xyz, "x^9 + y + 1"));
  EXPECT_EQ(v.status, Irreducibility::Unknown);
  EXPECT_FALSE(v.reason.empty());
  RingPtr four = make_indexed_ring("x", 4);
  EXPECT_EQ(is_irreducible(P(four, "x1*x2 + x3*x4")).status, Irreducibility::Unknown);
  EXPECT_EQ(is_irreducible(P(xy, "2000003*x^2 + y^2")).status, Irreducibility::Unknown);
  // structural splits are still exact past the caps
  EXPECT_TRUE(is_irreducible(P(xyz, "x^9*y + x*y^9")).reducible());
}

TEST_F(FactorTest, IrreducibleFactorsOfProducts) {
  auto fs = irreducible_factors(P(xy, "-3*x^2*(x + y)^2*(x^2 + y^2)"));
  ASSERT_TRUE(fs.has_value());
  ASSERT_EQ(fs->size(), 5u);
  EXPECT_EQ((*fs)[0], P(xy, "x"));
  EXPECT_EQ((*fs)[4], P(xy, "x^2 + y^2"));
}

// Products of random linear forms: the factor multiset is known in advance.
TEST_F(FactorTest, LinearProductsFactorCompletely) {
  PolyGen gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    int k = static_cast<int>(gen.integer(2, 4));
    std::vector<Polynomial> expected;
    Polynomial p = Polynomial::constant(xyz, static_cast<long>(gen.integer(1, 5)));
    for (int i = 0; i < k; ++i) {
      Polynomial l = gen.poly(xyz, 1, 4, 0.7);
      if (l.total_degree() < 1) l += Polynomial::variable(xyz, static_cast<std::size_t>(i % 3));
      expected.push_back(normalize_associate(l));
      p *= l;
    }
    auto fs = irreducible_factors(p);
    ASSERT_TRUE(fs.has_value());
    auto key = [](const Polynomial& a, const Polynomial& b) { return print_polynomial(a) < print_polynomial(b); };
    std::sort(expected.begin(), expected.end(), key);
    std::vector<Polynomial> got = *fs;
    std::sort(got.begin(), got.end(), key);
    EXPECT_EQ(got, expected) << p;
  }
}

TEST_F(FactorTest, VerdictProperties) {
  PolyGen gen(43);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = gen.nonconstant_poly(xyz, 3, 6, 0.3);
    if (trial % 3 == 0) p *= gen.nonconstant_poly(xyz, 2, 6, 0.4);
    auto v = is_irreducible(p);
    switch (v.status) {
      case Irreducibility::Irreducible:
        EXPECT_TRUE(is_squarefree(p)) << p;
        break;
      case Irreducibility::Reducible:
        EXPECT_FALSE(v.left->is_constant());
        EXPECT_FALSE(v.right->is_constant());
        EXPECT_EQ(normalize_associate(*v.left * *v.right), normalize_associate(p));
        break;
      case Irreducibility::Unknown:
        ADD_FAILURE() << "within caps: " << p;
    }
    if (trial % 3 == 0) EXPECT_TRUE(v.reducible()) << p;
  }
}

}  // namespace
}  // namespace dgcd
