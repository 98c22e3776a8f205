#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace zt;

TEST(Poly, ArithmeticAndNormalForm) {
  Poly a{1, 2, 3};
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * Poly::z(), (Poly{0, 1, 2, 3}));
  EXPECT_EQ((a + Poly{-1, -2, -3}).degree(), -1);
  EXPECT_EQ(P("8*z^4-8*z^2+1").to_string(), "8*z^4 - 8*z^2 + 1");
  EXPECT_EQ(P("(z-1)^2").derivative(), P("2*z-2"));
  EXPECT_EQ(P("z^3").antiderivative(), P("z^4/4"));
}

TEST(Poly, ComposeExamples) {
  EXPECT_EQ(compose(P("z^2"), P("z^2")), P("z^4"));
  EXPECT_EQ(compose(P("2*z^2-1"), P("2*z^2-1")), P("8*z^4-8*z^2+1"));
  Poly p = P("3*z^5 - z/7 + 2");
  EXPECT_EQ(compose(p, Poly::z()), p);
}

TEST(Poly, DividesExactExamples) {
  EXPECT_TRUE(divides_exact(P("(z-1)*(z^2+1)"), P("z^3-z^2+z-1")));
  EXPECT_FALSE(divides_exact(P("z+1"), P("z^3-z^2+z-1")));
  Gen gen(11);
  for (int trial = 0; trial < 50; trial++) {
    ZeroCycle c = gen.cycle(gen.integer(2, 12));
    EXPECT_TRUE(divides_exact(P("z-1"), p_poly(c, Permutation::shift(c.m()))));
  }
}

TEST(Poly, DivmodRoundTrip) {
  Gen gen(12);
  for (int trial = 0; trial < 100; trial++) {
    Poly a = gen.poly(gen.integer(0, 9), 9, 4), b = gen.poly(gen.integer(0, 5), 9, 4);
    DivMod qr = divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(Poly, GcdAndSquarefree) {
  EXPECT_EQ(gcd(P("(z-1)^2*(z+2)"), P("(z-1)*(z+3)")), P("z-1"));
  auto sq = squarefree_decomposition(P("(z-1)^3*(z+2)*(z^2+1)^2"));
  std::map<int, Poly> by_mult;
  for (auto& [p, k] : sq) by_mult[k] = p;
  EXPECT_EQ(by_mult.at(1), P("z+2"));
  EXPECT_EQ(by_mult.at(2), P("z^2+1"));
  EXPECT_EQ(by_mult.at(3), P("z-1"));
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic(1), P("z-1"));
  EXPECT_EQ(cyclotomic(4), P("z^2+1"));
  EXPECT_EQ(cyclotomic(6), P("z^2-z+1"));
}

// Brute-force product over primitive m-th roots, rounded to integers.
static Poly cyclotomic_oracle(int m) {
  std::vector<Complex> c{Complex(1)};
  for (int k = 1; k <= m; k++) {
    if (std::gcd(k, m) != 1) continue;
    const Complex r = std::polar(1.0, 2 * std::numbers::pi * k / m);
    std::vector<Complex> n(c.size() + 1);
    for (size_t i = 0; i < c.size(); i++) {
      n[i + 1] += c[i];
      n[i] -= r * c[i];
    }
    c = std::move(n);
  }
  std::vector<Rational> out;
  for (Complex v : c) out.emplace_back(static_cast<long>(std::lround(v.real())));
  return Poly(std::move(out));
}

TEST(Cyclotomic, MatchesRootProductOracle) {
  for (int m = 1; m <= 30; m++) EXPECT_EQ(cyclotomic(m), cyclotomic_oracle(m)) << m;
}

TEST(Cyclotomic, ProductOverDivisorsIsZmMinusOne) {
  for (int m = 1; m <= 64; m++) {
    auto table = cyclotomic_table(m);
    Poly prod{1};
    for (int d = 1; d <= m; d++)
      if (m % d == 0) prod *= table.at(d);
    EXPECT_EQ(prod, Poly::monomial(1, m) - Poly{1}) << m;
  }
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (int m = 1; m <= 64; m++) {
    int phi = 0;
    for (int k = 1; k <= m; k++) phi += std::gcd(k, m) == 1;
    EXPECT_EQ(cyclotomic(m).degree(), phi) << m;
    EXPECT_EQ(totient(m), phi) << m;
  }
}
