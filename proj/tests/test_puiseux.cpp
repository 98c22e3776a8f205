#include <gtest/gtest.h>

#include "support.hpp"

using namespace zt;

static Rational binom_half(int j) {
  Rational r = 1;
  for (int i = 0; i < j; i++) r *= (Rational(1, 2) - i) / (i + 1);
  return r;
}

TEST(Puiseux, PowerIsExactRoot) {
  for (int m = 1; m <= 6; m++) {
    auto s = puiseux_branch(Poly::monomial(1, m), 10);
    EXPECT_EQ(s.coeff(-1), 1);
    for (int k = 0; k <= 10; k++) EXPECT_EQ(s.coeff(k), 0);
  }
}

// (t - 1)^(1/2) = sum_j binom(1/2, j) (-1)^j t^(1/2 - j)
TEST(Puiseux, BinomialSeriesOracle) {
  auto s = puiseux_branch(P("z^2+1"), 20);
  for (int j = 0; 2 * j - 1 <= 20; j++) {
    EXPECT_EQ(s.coeff(2 * j - 1), binom_half(j) * (j % 2 ? -1 : 1)) << j;
    if (2 * j <= 20) {
      EXPECT_EQ(s.coeff(2 * j), 0);
    }
  }
}

TEST(Puiseux, OfGExamples) {
  for (int m = 2; m <= 5; m++)
    for (int j = 0; j <= 6; j++) {
      auto s = puiseux_of_g(Poly::monomial(1, m), Poly::monomial(1, j), 12);
      for (int k = s.k_min; k <= s.k_max(); k++) EXPECT_EQ(s.coeff(k), k == -j ? 1 : 0) << m << " " << j;
    }
  auto a = puiseux_of_g(P("z^2+1"), P("z^2"), 8);
  for (int k = -2; k <= 8; k++) EXPECT_EQ(a.coeff(k), k == -2 ? 1 : (k == 0 ? -1 : 0));
  // z_1^2 = 1/2 + sqrt(1 + 4t)/2 for z^4 - z^2
  auto b = puiseux_of_g(P("z^4-z^2"), P("z^2"), 30);
  for (int k = -2; k <= 30; k++) {
    Rational want = 0;
    if (k == 0) want = Rational(1, 2);
    if ((k + 2) % 4 == 0) {
      const int j = (k + 2) / 4;
      Rational p4 = 1;
      for (int i = 0; i < j; i++) p4 /= 4;
      want += binom_half(j) * p4;
    }
    EXPECT_EQ(b.coeff(k), want) << k;
  }
}

// Substituting the series back into f reproduces t through the truncation order.
TEST(Puiseux, CompositionCheckOnCorpus) {
  Gen gen(71);
  for (int trial = 0; trial < 25; trial++) {
    const Poly f = gen.poly(gen.integer(1, 6), 6, 3);
    const int m = f.degree();
    const int K = 3 * m + 4;
    auto s = puiseux_branch(f, K);
    // Y(u) = u z_1, with u = T^(-1/m); check sum_i f_i Y^i u^(m - i) = a
    Series y(s.coeffs.begin(), s.coeffs.end());
    const int n = K + 2;
    Series total(n), ypow{Rational(1)};
    for (int i = 0; i <= m; i++) {
      for (int k = 0; k + m - i < n && k < static_cast<int>(ypow.size()); k++) total[k + m - i] += f[i] * ypow[k];
      ypow = series_mul(ypow, y, n);
    }
    EXPECT_EQ(total[0], f.leading());
    for (int k = 1; k < n; k++) EXPECT_EQ(total[k], 0) << f.to_string() << " k=" << k;
  }
}

// Numeric evaluation of the truncated series against tracked roots at large t.
TEST(Puiseux, EvaluationMatchesRoots) {
  Gen gen(72);
  for (int trial = 0; trial < 20; trial++) {
    const Poly f = gen.poly(gen.integer(2, 6), 4, 2);
    const int m = f.degree();
    auto s = puiseux_branch(f, 8 * m);
    double R = 0;
    for (Complex c : critical_values(f)) R = std::max(R, std::abs(c));
    const Complex t = std::polar(100 * (1 + R), 0.37);
    auto roots = roots_of(ComplexPoly(f) - t).roots;
    for (int label = 0; label < m; label++) {
      const Complex z = s.evaluate(t, label);
      double best = 1e300;
      for (Complex r : roots) best = std::min(best, std::abs(r - z));
      EXPECT_LT(best, 1e-9 * std::abs(z)) << f.to_string();
    }
  }
}
