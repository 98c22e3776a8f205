#pragma once

// Functional decomposition f = outer(inner(z)) and cyclotomic polynomials.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zerocycle/poly.hpp"

namespace zerocycle {

struct Decomposition {
  Poly outer;
  Poly inner;
  bool normalized = true;  // inner monic with zero constant term
};

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; i++)
    if (n % i == 0) d.push_back(i);
  return d;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> p;
  for (int q = 2; q * q <= n; q++) {
    if (n % q) continue;
    p.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) p.push_back(n);
  return p;
}

inline int totient(int n) {
  int r = n;
  for (int p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

// First n coefficients of A(u)^alpha for a power series A with A(0) = 1, from
// k b_k = sum_{j=1..k} (alpha j - (k - j)) a_j b_{k-j}.
inline std::vector<Rational> series_power(const std::vector<Rational>& a, const Rational& alpha, int n) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("series_power needs constant term 1");
  std::vector<Rational> b(n);
  if (n == 0) return b;
  b[0] = 1;
  for (int k = 1; k < n; k++) {
    Rational s = 0;
    const int top = std::min<int>(k, static_cast<int>(a.size()) - 1);
    for (int j = 1; j <= top; j++) {
      if (a[j] == 0) continue;
      s += (alpha * j - (k - j)) * a[j] * b[k - j];
    }
    b[k] = s / k;
  }
  return b;
}

// Writes p as sum_i c_i h^i and returns sum_i c_i z^i when every c_i is constant.
inline std::optional<Poly> outer_in_terms_of(const Poly& p, const Poly& h) {
  if (h.degree() < 1) throw std::invalid_argument("outer_in_terms_of: inner must be nonconstant");
  std::vector<Rational> out;
  Poly rest = p;
  while (!rest.is_zero()) {
    DivMod qr = divmod(rest, h);
    if (qr.remainder.degree() > 0) return std::nullopt;
    out.push_back(qr.remainder[0]);
    rest = std::move(qr.quotient);
  }
  return Poly(std::move(out));
}

// Decomposition with deg(inner) = d, normalized to a monic inner with zero constant term.
// d = 1 and d = deg f give the trivial decompositions.
inline std::optional<Decomposition> decompose_degree(const Poly& f, int d) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("decompose_degree: f must be nonconstant");
  if (d < 1 || n % d != 0) throw std::invalid_argument("decompose_degree: d must divide deg f");
  if (d == 1) return Decomposition{f, Poly::z(), true};
  const Rational lc = f.leading();
  const Rational f0 = f[0];
  if (d == n) return Decomposition{Poly{0, 1} * lc + Poly::constant(f0), (f - Poly::constant(f0)) / lc, true};

  // Kozen-Landau: the top d coefficients of f determine inner as the r-th root of the reversed monic f.
  const int r = n / d;
  std::vector<Rational> rev(d);
  for (int i = 0; i < d; i++) rev[i] = f[n - i] / lc;
  std::vector<Rational> root = series_power(rev, Rational(1, r), d);
  std::vector<Rational> hc(d + 1);
  hc[d] = 1;
  for (int i = 1; i < d; i++) hc[d - i] = root[i];
  Poly h(std::move(hc));
  auto outer = outer_in_terms_of(f, h);
  if (!outer) return std::nullopt;
  return Decomposition{*outer, h, true};
}

// One normalized decomposition for every divisor d in D(f), keyed by deg(inner).
inline std::map<int, Decomposition> decomposition_set(const Poly& f) {
  if (f.degree() < 2) throw std::invalid_argument("decomposition_set: deg f must be at least 2");
  std::map<int, Decomposition> out;
  for (int d : divisors(f.degree())) {
    auto dec = decompose_degree(f, d);
    if (dec) out.emplace(d, std::move(*dec));
  }
  return out;
}

// Phi_d for every divisor d of m, by exact division of z^d - 1.
inline std::map<int, Poly> cyclotomic_table(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m must be positive");
  std::map<int, Poly> phi;
  for (int d : divisors(m)) {
    Poly p = Poly::monomial(1, d) - Poly::constant(1);
    for (auto& [e, q] : phi)
      if (d % e == 0) p = divmod(p, q).quotient;
    phi.emplace(d, std::move(p));
  }
  return phi;
}

inline Poly cyclotomic(int m) { return cyclotomic_table(m).at(m); }

}  // namespace zerocycle
