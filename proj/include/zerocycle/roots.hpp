#pragma once

// Aberth-Ehrlich simultaneous root finding.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zerocycle/errors.hpp"
#include "zerocycle/poly.hpp"

namespace zerocycle {

struct ComplexRootSet {
  std::vector<Complex> roots;
  double residual_bound = 0;
};

struct RootOptions {
  int max_sweeps = 200;
  double tolerance = 1e-14;
  double angle_offset = 0.4;
};

namespace detail {

// Starting points on circles whose radii come from the upper convex hull of (i, log|a_i|).
inline std::vector<Complex> newton_polygon_guesses(const ComplexPoly& p, double offset) {
  const int n = p.degree();
  std::vector<int> hull;
  std::vector<double> lg(n + 1);
  for (int i = 0; i <= n; i++) lg[i] = std::abs(p.c[i]) > 0 ? std::log(std::abs(p.c[i])) : -INFINITY;
  for (int i = 0; i <= n; i++) {
    if (!std::isfinite(lg[i])) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      // keep b only if it lies strictly above segment a-i
      if ((lg[b] - lg[a]) * (i - a) > (lg[i] - lg[a]) * (b - a)) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }
  std::vector<Complex> z;
  z.reserve(n);
  // roots at zero for vanishing low coefficients
  for (int i = 0; i < hull.front(); i++) z.emplace_back(0.0, 0.0);
  for (size_t h = 0; h + 1 < hull.size(); h++) {
    const int a = hull[h], b = hull[h + 1], k = b - a;
    const double r = std::exp((lg[a] - lg[b]) / k);
    for (int j = 0; j < k; j++) {
      const double ang = 2 * std::numbers::pi * j / k + 2 * std::numbers::pi * h / n + offset;
      z.push_back(std::polar(r, ang));
    }
  }
  return z;
}

}  // namespace detail

// All roots of a complex polynomial, counted with multiplicity. Convergence slows near
// multiple roots; exact inputs should go through the Poly overload, which deflates first.
inline ComplexRootSet roots_of(const ComplexPoly& p, const RootOptions& opt = {}) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("roots_of: degree must be at least 1");
  ComplexRootSet out;
  std::vector<Complex> z = detail::newton_polygon_guesses(p, opt.angle_offset);
  std::vector<bool> fixed(n, false);
  for (int i = 0; i < n; i++) fixed[i] = z[i] == Complex(0, 0) && p.c[0] == Complex(0, 0);
  bool converged = false;
  for (int sweep = 0; sweep < opt.max_sweeps && !converged; sweep++) {
    converged = true;
    for (int i = 0; i < n; i++) {
      if (fixed[i]) continue;
      auto [v, d] = p.eval_d(z[i]);
      if (v == Complex(0, 0)) continue;
      // value already at rounding level: further updates are noise
      const double az = std::abs(z[i]);
      double bound = 0;
      for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) bound = bound * az + std::abs(*it);
      const bool at_noise = std::abs(v) < 8 * std::numeric_limits<double>::epsilon() * bound;
      const Complex ratio = v / d;
      Complex s = 0;
      for (int j = 0; j < n; j++)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const Complex w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      if (!at_noise && std::abs(w) > opt.tolerance * (1 + std::abs(z[i]))) converged = false;
    }
  }
  if (!converged) throw NumericalFailure("roots_of: Aberth iteration did not converge in " +
                                         std::to_string(opt.max_sweeps) + " sweeps (ill-conditioned input)");
  double res = 0;
  for (auto r : z) res = std::max(res, static_cast<double>(p.abs_at(r)));
  out.roots = std::move(z);
  out.residual_bound = res;
  return out;
}

// Roots of an exact polynomial with multiplicity; each squarefree factor is solved separately.
inline ComplexRootSet roots_of(const Poly& p, const RootOptions& opt = {}) {
  if (p.degree() < 1) throw std::invalid_argument("roots_of: degree must be at least 1");
  ComplexRootSet out;
  for (auto& [factor, mult] : squarefree_decomposition(p)) {
    ComplexRootSet part = roots_of(ComplexPoly(factor), opt);
    for (auto r : part.roots)
      for (int k = 0; k < mult; k++) out.roots.push_back(r);
  }
  ComplexPoly cp(p);
  double res = 0;
  for (auto r : out.roots) res = std::max(res, static_cast<double>(cp.abs_at(r)));
  out.residual_bound = res;
  return out;
}

}  // namespace zerocycle
