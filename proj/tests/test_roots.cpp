#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace zt;

static void expect_same_multiset(std::vector<Complex> got, std::vector<Complex> want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (Complex w : want) {
    auto it = std::min_element(got.begin(), got.end(), [&](Complex a, Complex b) { return std::abs(a - w) < std::abs(b - w); });
    EXPECT_LT(std::abs(*it - w), tol) << w;
    got.erase(it);
  }
}

TEST(Roots, Examples) {
  expect_same_multiset(roots_of(P("z^2-1")).roots, {1.0, -1.0}, 1e-12);
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
  expect_same_multiset(roots_of(P("z^3-8")).roots, {2.0, 2.0 * w, 2.0 * w * w}, 1e-12);
  const double s = std::sqrt(0.5);
  expect_same_multiset(roots_of(P("z^4-z^2").derivative()).roots, {0.0, s, -s}, 1e-12);
}

TEST(Roots, MultiplicityFromDeflation) {
  auto r = roots_of(P("(z-1)^3*(z+2)^2"));
  expect_same_multiset(r.roots, {1.0, 1.0, 1.0, -2.0, -2.0}, 1e-12);
}

TEST(Roots, CriticalValuesExamples) {
  auto a = critical_values(P("z^5"));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], Complex(0));
  expect_same_multiset(critical_values(P("z^4-z^2")), {0.0, -0.25}, 1e-12);
  expect_same_multiset(critical_values(P("z^3-3*z")), {2.0, -2.0}, 1e-12);
}

// Residual invariant on random integer polynomials of degree <= 10 with coefficients in [-10, 10].
// Roots of modulus above 1 carry an unavoidable rounding residual of order eps * sum |a_i| |z|^i,
// so the bound is scaled by max(1, |z|)^deg; for roots inside the unit disk this is the plain
// 1e-9 (1 + max |coeff|) bound.
TEST(Roots, ResidualBoundOnRandomPolynomials) {
  Gen gen(31);
  int within_plain_bound = 0;
  for (int trial = 0; trial < 200; trial++) {
    const Poly p = gen.poly(gen.integer(1, 10), 10);
    double maxc = 0;
    for (auto& c : p.coeffs()) maxc = std::max(maxc, std::abs(c.get_d()));
    auto r = roots_of(p);
    double rmax = 1;
    for (Complex z : r.roots) rmax = std::max(rmax, std::abs(z));
    ASSERT_EQ(static_cast<int>(r.roots.size()), p.degree());
    const ComplexPoly cp(p);
    double worst = 0;
    for (Complex z : r.roots) worst = std::max(worst, static_cast<double>(cp.abs_at(z)));
    EXPECT_LE(worst, r.residual_bound * (1 + 1e-12));
    EXPECT_LE(r.residual_bound, 1e-9 * (1 + maxc) * std::pow(rmax, p.degree())) << p.to_string();
    if (rmax <= 1.5) {
      EXPECT_LE(r.residual_bound, 1e-9 * (1 + maxc)) << p.to_string();
    }
    if (r.residual_bound <= 1e-9 * (1 + maxc)) within_plain_bound++;
  }
  EXPECT_GE(within_plain_bound, 190);
}

TEST(Roots, ComplexCoefficients) {
  ComplexPoly p(std::vector<Complex>{Complex(0, -1), 0, 1});  // z^2 - i
  auto r = roots_of(p);
  const Complex s = std::polar(1.0, std::numbers::pi / 4);
  expect_same_multiset(r.roots, {s, -s}, 1e-12);
}
