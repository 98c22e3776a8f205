#pragma once

// Puiseux expansions at t = infinity of the principal branch z_1(t) of f(z) = t and of g(z_1(t)).
//
// With a = lc(f), T = t/a and u = T^(-1/m), the branch is z_1 = u^-1 Y(u) where Y(0) = 1 solves
//   sum_i (f_i / a) Y^i u^(m-i) = 1.
// All coefficients are exact rationals in powers of T^(-1/m). The complex coefficient of t^(-k/m)
// is s_k = coeff_k * c^(-k) with c the principal m-th root of 1/a, and branch i (0-based label)
// replaces t^(1/m) by eps^i t^(1/m), eps = exp(2 pi i / m).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zerocycle/decompose.hpp"
#include "zerocycle/poly.hpp"

namespace zerocycle {

using Series = std::vector<Rational>;

inline Series series_mul(const Series& a, const Series& b, int n) {
  Series r(n);
  std::vector<int> nb;
  for (int j = 0; j < std::min<int>(n, b.size()); j++)
    if (b[j] != 0) nb.push_back(j);
  for (int i = 0; i < std::min<int>(n, a.size()); i++) {
    if (a[i] == 0) continue;
    for (int j : nb) {
      if (i + j >= n) break;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

inline Series series_inverse(const Series& a, int n) {
  if (a.empty() || a[0] == 0) throw std::invalid_argument("series_inverse: zero constant term");
  Series r(n);
  if (n == 0) return r;
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (int k = 1; k < n; k++) {
    Rational s = 0;
    for (int j = 1; j <= std::min<int>(k, a.size() - 1); j++)
      if (a[j] != 0) s += a[j] * r[k - j];
    r[k] = -s * inv0;
  }
  return r;
}

struct PuiseuxSeries {
  int m = 1;
  Rational lead = 1;            // a = lc(f)
  int k_min = 0;                // exponent of coeffs[0]
  std::vector<Rational> coeffs; // coefficient of T^(-k/m), k = k_min + index

  int k_max() const { return k_min + static_cast<int>(coeffs.size()) - 1; }

  Rational coeff(int k) const {
    const int i = k - k_min;
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : Rational(0);
  }

  // principal m-th root of 1/a
  Complex root_of_inverse_lead() const {
    return std::pow(Complex(1.0 / lead.get_d(), 0.0), 1.0 / m);
  }

  // s_k: the coefficient of t^(-k/m) for the principal branch.
  Complex s(int k) const { return coeff(k).get_d() * std::pow(root_of_inverse_lead(), -k); }

  // Value of the series on branch `label` (0-based) at t, using the principal t^(1/m).
  Complex evaluate(Complex t, int label = 0) const {
    const Complex eps = std::polar(1.0, 2 * std::numbers::pi * label / m);
    const Complex root = root_of_inverse_lead() * std::pow(t, 1.0 / m) * eps;
    const Complex u = 1.0 / root;
    Complex acc = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; i--) acc = acc * u + coeffs[i].get_d();
    return acc * std::pow(u, k_min);
  }
};

namespace detail {

// Y(u) to n terms.
inline Series puiseux_y(const Poly& f, int n) {
  const int m = f.degree();
  if (m < 1) throw std::invalid_argument("puiseux: f must be nonconstant");
  const Rational a = f.leading();
  std::vector<Rational> fh(m + 1);
  for (int i = 0; i <= m; i++) fh[i] = f[i] / a;

  bool monomial = true;
  for (int i = 1; i < m; i++)
    if (fh[i] != 0) monomial = false;
  if (monomial) {
    // Y^m = 1 - fh_0 u^m
    Series base(m + 1);
    base[0] = 1;
    base[m] = -fh[0];
    return series_power(base, Rational(1, m), n);
  }

  Series y{Rational(1)};
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    y.resize(prec);
    // Phi(Y) = sum fh_i Y^i u^(m-i) - 1 and its Y-derivative, by Horner
    Series phi{fh[m]}, dphi{fh[m] * m};
    for (int i = m - 1; i >= 0; i--) {
      phi = series_mul(phi, y, prec);
      phi.resize(prec);
      if (m - i < prec) phi[m - i] += fh[i];
      if (i >= 1) {
        dphi = series_mul(dphi, y, prec);
        dphi.resize(prec);
        if (m - i < prec) dphi[m - i] += fh[i] * i;
      }
    }
    phi[0] -= 1;
    Series corr = series_mul(phi, series_inverse(dphi, prec), prec);
    for (int k = 0; k < prec; k++) y[k] -= corr[k];
  }
  y.resize(n);
  return y;
}

}  // namespace detail

// z_1(t) with coefficients for T^(-k/m), k = -1..order.
inline PuiseuxSeries puiseux_branch(const Poly& f, int order) {
  if (order < 1) throw std::invalid_argument("puiseux_branch: order must be at least 1");
  PuiseuxSeries ps;
  ps.m = f.degree();
  ps.lead = f.leading();
  ps.k_min = -1;
  ps.coeffs = detail::puiseux_y(f, order + 2);
  return ps;
}

// g(z_1(t)) with coefficients for k = -deg g .. order.
inline PuiseuxSeries puiseux_of_g(const Poly& f, const Poly& g, int order) {
  PuiseuxSeries ps;
  ps.m = f.degree();
  ps.lead = f.leading();
  if (g.is_zero()) {
    ps.k_min = 0;
    return ps;
  }
  const int D = g.degree();
  const int n = order + D + 1;
  Series y = detail::puiseux_y(f, n);
  // u^D g(Y/u) = sum g_j Y^j u^(D-j)
  Series acc{g[D]};
  for (int j = D - 1; j >= 0; j--) {
    acc = series_mul(acc, y, n);
    acc.resize(n);
    if (D - j < n) acc[D - j] += g[j];
  }
  acc.resize(n);
  ps.k_min = -D;
  ps.coeffs = std::move(acc);
  return ps;
}

}  // namespace zerocycle
