#include <gtest/gtest.h>

#include "support.hpp"

using namespace zt;

static std::set<int> keys(const std::map<int, Decomposition>& m) {
  std::set<int> s;
  for (auto& [d, dec] : m) s.insert(d);
  return s;
}

TEST(Decompose, DegreeExamples) {
  auto a = decompose_degree(P("z^4"), 2);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->inner, P("z^2"));
  EXPECT_EQ(a->outer, P("z^2"));

  auto t = decompose_degree(P("8*z^4-8*z^2+1"), 2);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->inner, P("z^2"));
  EXPECT_EQ(t->outer, P("8*z^2-8*z+1"));

  auto b = decompose_degree(P("z^4-z^2"), 2);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->inner, P("z^2"));
  EXPECT_EQ(b->outer, P("z^2-z"));

  EXPECT_FALSE(decompose_degree(P("z^4+z"), 2));
  EXPECT_THROW(decompose_degree(P("z^4"), 3), std::invalid_argument);
  EXPECT_THROW(decomposition_set(P("z")), std::invalid_argument);
}

TEST(Decompose, SetExamples) {
  EXPECT_EQ(keys(decomposition_set(P("z^6"))), (std::set<int>{1, 2, 3, 6}));
  EXPECT_EQ(keys(decomposition_set(P("z^4-z^2"))), (std::set<int>{1, 2, 4}));
  EXPECT_EQ(keys(decomposition_set(P("(z^2+z)^6"))), (std::set<int>{1, 2, 4, 6, 12}));
  auto ds = decomposition_set(P("(z^2+z)^6"));
  EXPECT_EQ(ds.at(2).inner, P("z^2+z"));
  EXPECT_EQ(ds.at(2).outer, P("z^6"));
}

TEST(Decompose, PowerHasAllDivisors) {
  for (int m = 2; m <= 36; m++) {
    std::set<int> want;
    for (int d : divisors(m)) want.insert(d);
    EXPECT_EQ(keys(decomposition_set(Poly::monomial(1, m))), want) << m;
  }
}

// Every decomposition composes back exactly, degrees multiply, and inner is normalized.
TEST(Decompose, RoundTripOnRandomComposites) {
  Gen gen(21);
  for (int trial = 0; trial < 60; trial++) {
    const Poly outer = gen.poly(gen.integer(2, 4), 6, 3);
    const Poly inner = gen.poly(gen.integer(2, 3), 6, 3);
    const Poly f = compose(outer, inner);
    auto ds = decomposition_set(f);
    ASSERT_TRUE(ds.count(inner.degree())) << f.to_string();
    for (auto& [d, dec] : ds) {
      EXPECT_EQ(compose(dec.outer, dec.inner), f);
      EXPECT_EQ(dec.inner.degree() * dec.outer.degree(), f.degree());
      EXPECT_EQ(dec.inner.degree(), d);
      EXPECT_EQ(dec.inner[0], 0);
      EXPECT_EQ(dec.inner.leading(), 1);
    }
    // the normalized inner factor differs from the planted one by an affine map
    const Poly& h = ds.at(inner.degree()).inner;
    const Poly shifted = (inner - Poly::constant(inner[0])) / inner.leading();
    EXPECT_EQ(h, shifted);
  }
}

TEST(Decompose, OuterInTermsOf) {
  auto g0 = outer_in_terms_of(P("(z^2+z)^2 + 3*(z^2+z)"), P("z^2+z"));
  ASSERT_TRUE(g0);
  EXPECT_EQ(*g0, P("z^2+3*z"));
  EXPECT_FALSE(outer_in_terms_of(P("z^3"), P("z^2")));
}
