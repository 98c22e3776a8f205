#pragma once

// Fixed-seed generators shared by the property tests.

#include <random>
#include <vector>

#include "zerocycle/zerocycle.hpp"

namespace zt {

using namespace zerocycle;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Rational with numerator in [-span, span] and denominator in [1, den].
  Rational rational(int span, int den = 1) {
    Rational r(integer(-span, span), integer(1, den));
    r.canonicalize();
    return r;
  }

  // Degree exactly d, nonzero leading coefficient.
  Poly poly(int d, int span = 5, int den = 1) {
    std::vector<Rational> c(d + 1);
    for (int i = 0; i <= d; i++) c[i] = rational(span, den);
    while (c[d] == 0) c[d] = rational(span, den);
    return Poly(std::move(c));
  }

  // Nonzero cycle with weights in [-span, span].
  ZeroCycle cycle(int m, int span = 3) {
    while (true) {
      std::vector<long> w(m);
      long s = 0;
      for (int i = 0; i + 1 < m; i++) {
        w[i] = integer(-span, span);
        s += w[i];
      }
      w[m - 1] = -s;
      bool nz = false;
      for (long v : w) nz = nz || v != 0;
      if (nz) return ZeroCycle(std::move(w));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Poly P(const char* s) { return parse_poly(s); }

}  // namespace zt
