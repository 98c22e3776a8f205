#pragma once

// Exact univariate polynomials over Q and their double-precision complex shadows.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zerocycle {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
  static Poly monomial(const Rational& v, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<Rational> c(degree + 1);
    c[degree] = v;
    return Poly(std::move(c));
  }
  static Poly z() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient of z^i, zero outside the stored range.
  Rational operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Complex eval(Complex x) const {
    Complex r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); i++) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  // Antiderivative with zero constant term.
  Poly antiderivative() const {
    if (c_.empty()) return {};
    std::vector<Rational> d(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); i++) d[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return {};
    return *this / leading();
  }

  std::vector<double> to_double() const {
    std::vector<double> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v.get_d());
    return r;
  }

  bool is_integral() const {
    for (const auto& v : c_)
      if (v.get_den() != 1) return false;
    return true;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); i++) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); i++) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  Poly& operator/=(const Rational& s) {
    if (s == 0) throw std::domain_error("polynomial division by zero scalar");
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); i++) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); j++) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Descending-degree text in the input grammar, e.g. "8*z^4 - 8*z^2 + 1".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; i--) {
      const Rational& v = c_[i];
      if (v == 0) continue;
      Rational a = abs(v);
      if (s.empty())
        s += v < 0 ? "-" : "";
      else
        s += v < 0 ? " - " : " + ";
      std::string mag = a.get_str();
      if (i == 0)
        s += mag;
      else {
        if (a != 1) s += mag + "*";
        s += i == 1 ? "z" : "z^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::constant(1), b = p;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

// p(q(z)) by Horner's rule.
inline Poly compose(const Poly& p, const Poly& q) {
  Poly r;
  for (int i = p.degree(); i >= 0; i--) r = r * q + Poly::constant(p[i]);
  return r;
}

struct DivMod {
  Poly quotient, remainder;
};

inline DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<Rational> q(da - db + 1);
  const Rational lb = b.leading();
  const auto& bc = b.coeffs();
  for (int i = da - db; i >= 0; i--) {
    if (r[i + db] == 0) continue;
    const Rational t = r[i + db] / lb;
    q[i] = t;
    for (int j = 0; j <= db; j++)
      if (bc[j] != 0) r[i + j] -= t * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

inline bool divides_exact(const Poly& d, const Poly& p) {
  if (d.is_zero()) throw std::invalid_argument("divides_exact: divisor is zero");
  return divmod(p, d).remainder.is_zero();
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a.monic();
}

// Yun's algorithm: p = lc * prod_i factors[i].first ^ factors[i].second with squarefree, coprime factors.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = divmod(f, a).quotient;
  Poly c = divmod(fp, a).quotient;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; i++) {
    a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
  }
  return out;
}

// Complex-coefficient polynomial used by numeric kernels.
struct ComplexPoly {
  std::vector<Complex> c;  // ascending

  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<Complex> coeffs) : c(std::move(coeffs)) {}
  explicit ComplexPoly(const Poly& p) {
    for (const auto& v : p.coeffs()) c.emplace_back(v.get_d(), 0.0);
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }

  Complex operator()(Complex x) const {
    Complex r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Value and first derivative together.
  std::pair<Complex, Complex> eval_d(Complex x) const {
    Complex v = 0, d = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      d = d * x + v;
      v = v * x + *it;
    }
    return {v, d};
  }

  // Evaluation in long double, for residual reporting.
  long double abs_at(Complex x) const {
    std::complex<long double> r = 0, xl(x.real(), x.imag());
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * xl + std::complex<long double>(it->real(), it->imag());
    return std::abs(r);
  }

  // p(z) - t
  friend ComplexPoly operator-(ComplexPoly p, Complex t) {
    if (p.c.empty()) p.c.push_back(0);
    p.c[0] -= t;
    return p;
  }

  double max_abs_coeff() const {
    double m = 0;
    for (auto v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

}  // namespace zerocycle
