#pragma once

// Laurent polynomials sum_{k=low}^{high} c_k z^k with rational coefficients.

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerocycle/poly.hpp"

namespace zerocycle {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }
  explicit LaurentPoly(const Poly& p) : low_(0), c_(p.coeffs()) { trim(); }
  static LaurentPoly monomial(const Rational& v, int k) { return LaurentPoly(k, {v}); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return c_.empty() ? 0 : low_; }
  int high() const { return c_.empty() ? -1 : low_ + static_cast<int>(c_.size()) - 1; }
  Rational operator[](int k) const {
    const int i = k - low_;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }

  // Orders of the poles at 0 and at infinity.
  int pole_order_zero() const { return std::max(0, -low()); }
  int pole_order_infinity() const { return std::max(0, high()); }

  Complex eval(Complex z) const {
    Complex r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + it->get_d();
    return r * std::pow(z, low_);
  }

  LaurentPoly derivative() const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); i++) d[i] = c_[i] * (low_ + static_cast<int>(i));
    return LaurentPoly(low_ - 1, std::move(d));
  }

  // z^s * this as an ordinary polynomial; requires s >= -low.
  Poly shifted_poly(int s) const {
    if (is_zero()) return {};
    if (low_ + s < 0) throw std::invalid_argument("shift too small for a polynomial");
    std::vector<Rational> p(low_ + s + c_.size());
    for (size_t i = 0; i < c_.size(); i++) p[low_ + s + i] = c_[i];
    return Poly(std::move(p));
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<Rational> c(hi - lo + 1);
    for (int k = lo; k <= hi; k++) c[k - lo] = a[k] + b[k];
    return LaurentPoly(lo, std::move(c));
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); i++) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); j++) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(c));
  }
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low() == b.low() && a.c_ == b.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = high(); k >= low_; k--) {
      const Rational v = (*this)[k];
      if (v == 0) continue;
      Rational a = abs(v);
      s += s.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
      if (k == 0) {
        s += a.get_str();
        continue;
      }
      if (a != 1) s += a.get_str() + "*";
      s += k == 1 ? "z" : "z^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    return s;
  }

 private:
  void trim() {
    size_t first = 0;
    while (first < c_.size() && c_[first] == 0) first++;
    if (first == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + first);
    low_ += static_cast<int>(first);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  int low_ = 0;
  std::vector<Rational> c_;
};

inline LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly r = LaurentPoly::monomial(1, 0), b = p;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace zerocycle
