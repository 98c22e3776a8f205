#pragma once

// Special families: f = z^m, Chebyshev polynomials, polynomial and Laurent moment problems,
// hyperelliptic integrals for y^2 + x^m, and slow-fast first-order centers.

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "zerocycle/abelian.hpp"
#include "zerocycle/cycles.hpp"
#include "zerocycle/laurent.hpp"
#include "zerocycle/roots.hpp"

namespace zerocycle {

// ---- f = z^m ----

struct ZmSolutions {
  int m = 0;
  std::vector<int> allowed;    // residues j mod m with z^j permitted in g
  std::vector<int> forbidden;
};

inline ZmSolutions zm_solutions(int m, const ZeroCycle& c) {
  if (c.m() != m) throw std::invalid_argument("zm_solutions: cycle size differs from m");
  if (!is_balanced(c, {Permutation::shift(m)}).balanced)
    throw std::invalid_argument("zm_solutions: cycle is not balanced for z^m");
  ZmSolutions s;
  s.m = m;
  s.allowed = zm_allowed_residues(c);
  for (int r = 0; r < m; r++)
    if (std::find(s.allowed.begin(), s.allowed.end(), r) == s.allowed.end()) s.forbidden.push_back(r);
  return s;
}

inline Poly chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: n must be nonnegative");
  Poly a{1}, b{0, 1};
  if (n == 0) return a;
  for (int k = 1; k < n; k++) {
    Poly c = Poly{0, 2} * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

// ---- polynomial moment problem ----

inline int root_multiplicity(Poly p, const Rational& at) {
  if (p.is_zero()) throw std::invalid_argument("root_multiplicity of the zero polynomial");
  const Poly lin = Poly{0, 1} - Poly::constant(at);
  int k = 0;
  while (true) {
    DivMod qr = divmod(p, lin);
    if (!qr.remainder.is_zero()) return k;
    p = std::move(qr.quotient);
    k++;
  }
}

struct MomentCycleReport {
  ZeroCycle cycle;
  int n0 = 0, n1 = 0;
  std::vector<int> near_zero, near_one;  // 0-based labels
  bool totally_unbalanced = false;
  CycleClassification classification;
};

// C_f = n1 * (branches near 0) - n0 * (branches near 1) for t near f(0), in tau_infinity labels.
inline MomentCycleReport moment_cycle(const Poly& f, const MonodromyData& data, const ClassifyOptions& opt = {}) {
  if (f.degree() < 2) throw std::invalid_argument("moment_cycle: deg f must be at least 2");
  const Rational f0 = f.eval(Rational(0));
  if (f0 != f.eval(Rational(1))) throw std::invalid_argument("moment_cycle: requires f(0) = f(1)");
  MomentCycleReport rep;
  const Poly p = f - Poly::constant(f0);
  rep.n0 = root_multiplicity(p, 0);
  rep.n1 = root_multiplicity(p, 1);
  Poly other = divmod(p, pow(Poly{0, 1}, rep.n0) * pow(Poly{-1, 1}, rep.n1)).quotient;
  double dist0 = 1, dist1 = 1;
  if (other.degree() >= 1)
    for (Complex r : roots_of(other).roots) {
      dist0 = std::min(dist0, std::abs(r));
      dist1 = std::min(dist1, std::abs(r - 1.0));
    }
  const double r0 = 0.1 * dist0, r1 = 0.1 * dist1;

  // route from t0 toward f(0), through a waypoint on the basepoint circle if the direct segment is crowded
  const Complex target(f0.get_d(), 0);
  const Complex t0 = data.basepoint;
  const double same = 1e-12 * (1 + std::abs(target));
  double rho = data.loop_radius;
  for (auto s : data.critical_values)
    if (std::abs(s - target) > same) rho = std::min(rho, 0.4 * std::abs(s - target));
  auto clear = [&](Complex a, Complex b) {
    for (auto s : data.critical_values)
      if (std::abs(s - target) > same && PathPiece::line(a, b).distance_to(s) < rho) return false;
    return true;
  };
  Path route;
  if (clear(t0, target)) {
    route = Path::segment(t0, target);
  } else {
    bool found = false;
    for (int k = 1; k < 64 && !found; k++) {
      const Complex w = std::polar(std::abs(t0), std::arg(t0) + (k % 2 ? 1 : -1) * 0.1 * ((k + 1) / 2));
      if (clear(w, target)) {
        route = Path({PathPiece::arc(0, std::abs(t0), std::arg(t0), std::arg(w / t0)), PathPiece::line(w, target)});
        found = true;
      }
    }
    if (!found) throw NumericalFailure("moment_cycle: no clear route toward f(0)");
  }
  // stop short of f(0) and shrink until the branch clusters are resolved
  const ComplexPoly cf(f);
  std::vector<PathPiece> pieces = route.pieces();
  const Complex from = pieces.back().a;
  const Complex dir = (from - target) / std::abs(from - target);
  double delta = std::min(0.5 * rho, 0.5 * std::abs(from - target));
  pieces.back() = PathPiece::line(from, target + delta * dir);
  std::vector<Complex> z = track_path(cf, Path(pieces), data.fiber, opt.monodromy.track).fiber;
  const int m = f.degree();
  for (int iter = 0;; iter++) {
    std::vector<int> a, b;
    for (int i = 0; i < m; i++) {
      if (std::abs(z[i]) < r0) a.push_back(i);
      if (std::abs(z[i] - 1.0) < r1) b.push_back(i);
    }
    if (static_cast<int>(a.size()) == rep.n0 && static_cast<int>(b.size()) == rep.n1) {
      rep.near_zero = a;
      rep.near_one = b;
      break;
    }
    if (iter > 60) throw NumericalFailure("moment_cycle: branches near 0 and 1 did not separate");
    const Complex t_old = target + delta * dir;
    delta *= 0.25;
    z = track_path(cf, Path::segment(t_old, target + delta * dir), z, opt.monodromy.track).fiber;
  }
  std::vector<long> w(m, 0);
  for (int i : rep.near_zero) w[i] = rep.n1;
  for (int i : rep.near_one) w[i] = -rep.n0;
  rep.cycle = ZeroCycle(std::move(w));
  rep.classification = is_totally_unbalanced(f, rep.cycle, data, opt);
  rep.totally_unbalanced = rep.classification.totally_unbalanced;
  if (!rep.totally_unbalanced)
    throw InconsistentEvidence("moment_cycle: computed C_f is not totally unbalanced");
  return rep;
}

inline MomentCycleReport moment_cycle(const Poly& f, const ClassifyOptions& opt = {}) {
  return moment_cycle(f, monodromy_data(f, opt.monodromy), opt);
}

// integral_0^1 f^k q for k = 0 .. K-1, exactly.
inline std::vector<Rational> moment_oracle(const Poly& f, const Poly& q, int K) {
  if (K < 1) throw std::invalid_argument("moment_oracle: K must be at least 1");
  std::vector<Rational> out;
  Poly fk = Poly::constant(1);
  for (int k = 0; k < K; k++) {
    const Poly anti = (fk * q).antiderivative();
    out.push_back(anti.eval(Rational(1)) - anti.eval(Rational(0)));
    fk *= f;
  }
  return out;
}

// ---- Laurent moment problem ----

struct LaurentCycleReport {
  ZeroCycle cycle;
  int n = 0, m = 0;          // pole orders at 0 and infinity
  Complex reference_t;       // labels live at this t
  std::vector<Complex> fiber;  // labels 0..n-1 near 0, n..n+m-1 near infinity
};

namespace detail {

// z^n (f(z) - t) = N(z) - t z^n
struct LaurentHomotopy {
  const ComplexPoly& num;
  int n;
  const PathPiece& piece;
  HomotopyValue operator()(Complex z, double s) const {
    auto [v, d] = num.eval_d(z);
    const Complex t = piece.at(s), dt = piece.derivative(s);
    const Complex zn = std::pow(z, n);
    const Complex zn1 = n > 0 ? static_cast<double>(n) * std::pow(z, n - 1) : Complex(0);
    const double az = std::abs(z);
    double acc = 0;
    for (auto it = num.c.rbegin(); it != num.c.rend(); ++it) acc = acc * az + std::abs(*it);
    return {v - t * zn, d - t * zn1, -dt * zn, acc + std::abs(t) * std::abs(zn)};
  }
};

inline std::vector<Complex> laurent_track(const ComplexPoly& num, int n, const Path& path, std::vector<Complex> z,
                                          const TrackOptions& opt) {
  for (const auto& piece : path.pieces()) z = track_homotopy(LaurentHomotopy{num, n, piece}, std::move(z), opt);
  return z;
}

inline double laurent_critical_radius(const LaurentPoly& f) {
  const int n = f.pole_order_zero();
  const Poly crit = (f.derivative()).shifted_poly(n + 1);
  double R = 0;
  if (crit.degree() >= 1)
    for (Complex c : roots_of(crit).roots)
      if (std::abs(c) > 0) R = std::max(R, std::abs(f.eval(c)));
  return R;
}

}  // namespace detail

inline LaurentCycleReport laurent_moment_cycle(const LaurentPoly& f, const TrackOptions& opt = {}) {
  LaurentCycleReport rep;
  rep.n = f.pole_order_zero();
  rep.m = f.pole_order_infinity();
  if (rep.n < 1 || rep.m < 1 || f.low() != -rep.n)
    throw std::invalid_argument("laurent_moment_cycle: f must be a proper Laurent polynomial (poles at 0 and infinity)");
  const double R = detail::laurent_critical_radius(f);
  rep.reference_t = Complex(1 + 2 * R, 0) * std::polar(1.0, 0.1);
  const Poly num = f.shifted_poly(rep.n);
  const ComplexPoly cnum(num);
  // roots of N(z) - t z^n at the reference point
  ComplexPoly pt = cnum;
  pt.c[rep.n] -= rep.reference_t;
  const std::vector<Complex> z = roots_of(pt).roots;
  // classify by following the ray outward until the two groups separate by modulus
  std::vector<Complex> far = z;
  Complex t = rep.reference_t;
  for (int step = 0; step < 12; step++) {
    const Complex t_next = t * 10.0;
    far = detail::laurent_track(cnum, rep.n, Path({PathPiece::ray(t, t_next)}), far, opt);
    t = t_next;
    std::vector<double> mod;
    for (auto v : far) mod.push_back(std::abs(v));
    std::vector<double> sorted = mod;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[rep.n - 1] * 100 < sorted[rep.n]) {
      const double cut = std::sqrt(sorted[rep.n - 1] * sorted[rep.n]);
      std::vector<std::pair<double, Complex>> small, large;
      for (size_t i = 0; i < z.size(); i++)
        (mod[i] < cut ? small : large).emplace_back(std::arg(z[i]), z[i]);
      std::sort(small.begin(), small.end(), [](auto& a, auto& b) { return a.first < b.first; });
      std::sort(large.begin(), large.end(), [](auto& a, auto& b) { return a.first < b.first; });
      std::vector<long> w;
      for (auto& [a, v] : small) {
        rep.fiber.push_back(v);
        w.push_back(rep.m);
      }
      for (auto& [a, v] : large) {
        rep.fiber.push_back(v);
        w.push_back(-rep.n);
      }
      rep.cycle = ZeroCycle(std::move(w));
      return rep;
    }
  }
  throw NumericalFailure("laurent_moment_cycle: branches at 0 and infinity did not separate");
}

// Residues r_k = [z^-1] f^k g' for k = 0 .. K-1; the contour moment is 2 pi i r_k.
inline std::vector<Rational> laurent_moment_oracle(const LaurentPoly& f, const LaurentPoly& g, int K) {
  if (K < 1) throw std::invalid_argument("laurent_moment_oracle: K must be at least 1");
  const LaurentPoly gp = g.derivative();
  std::vector<Rational> out;
  LaurentPoly fk = LaurentPoly::monomial(1, 0);
  for (int k = 0; k < K; k++) {
    out.push_back((fk * gp)[-1]);
    fk = fk * f;
  }
  return out;
}

// Sampled test of sum_i n_i g(z_i(t)) == 0 on the annulus outside the critical values.
inline VanishingEvidence laurent_cycle_evidence(const LaurentPoly& f, const LaurentPoly& g,
                                                const LaurentCycleReport& rep, const VanishingOptions& opt = {},
                                                const TrackOptions& track = {}) {
  VanishingEvidence ev;
  ev.order = 0;
  const Poly num = f.shifted_poly(rep.n);
  const ComplexPoly cnum(num);
  const double r0 = std::abs(rep.reference_t);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> rad(1.0, 3.0), ang(-std::numbers::pi, std::numbers::pi);
  const int total = rep.n + rep.m;
  for (int s = 0; s < opt.samples; s++) {
    const double r = r0 * rad(rng);
    const double phi = ang(rng);
    const Complex mid = std::polar(r, std::arg(rep.reference_t));
    Path path({PathPiece::ray(rep.reference_t, mid), PathPiece::arc(0, r, std::arg(rep.reference_t), phi - std::arg(rep.reference_t))});
    std::vector<Complex> z = detail::laurent_track(cnum, rep.n, path, rep.fiber, track);
    Complex sum = 0;
    double gmax = 0;
    for (int i = 0; i < total; i++) {
      const Complex gv = g.eval(z[i]);
      gmax = std::max(gmax, std::abs(gv));
      sum += static_cast<double>(rep.cycle[i]) * gv;
    }
    const double denom = static_cast<double>(rep.cycle.l1_norm()) * gmax;
    ev.worst_numeric_residual = std::max(ev.worst_numeric_residual, denom > 0 ? std::abs(sum) / denom : 0.0);
    ev.samples++;
  }
  ev.numeric_pass = ev.worst_numeric_residual < opt.tolerance;
  ev.pass = ev.numeric_pass;
  return ev;
}

// ---- hyperelliptic y^2 + x^m ----

struct OneCycle {
  int m = 0;
  std::vector<long> basis_coeffs;  // on gamma_{i,i+1}, i = 1..m-1
};

inline ZeroCycle hyperelliptic_phi(const OneCycle& g) {
  const int m = g.m;
  if (m % 2) throw std::invalid_argument("hyperelliptic_phi: odd m is not supported");
  if (static_cast<int>(g.basis_coeffs.size()) != m - 1) throw std::invalid_argument("hyperelliptic_phi: need m-1 coefficients");
  std::vector<long> w(m, 0);
  for (int i = 0; i < m - 1; i++) {
    w[i] -= g.basis_coeffs[i];
    w[i + 1] += g.basis_coeffs[i];
  }
  return ZeroCycle(std::move(w));
}

inline OneCycle hyperelliptic_phi_inverse(const ZeroCycle& c) {
  const int m = c.m();
  if (m % 2) throw std::invalid_argument("hyperelliptic_phi_inverse: odd m is not supported");
  OneCycle g;
  g.m = m;
  long run = 0;
  for (int i = 0; i < m - 1; i++) {
    run += c[i];
    g.basis_coeffs.push_back(-run);
  }
  return g;
}

// kappa(x) y dx integrates to zero on phi^-1(C) iff every exponent j of kappa has j + 1 in zm_solutions.
inline bool hyperelliptic_xm_condition(int m, const ZeroCycle& c, const Poly& kappa) {
  if (m % 2) throw std::invalid_argument("hyperelliptic_xm_condition: odd m is not supported");
  const ZmSolutions s = zm_solutions(m, c);
  for (int j = 0; j <= kappa.degree(); j++) {
    if (kappa[j] == 0) continue;
    if (std::find(s.allowed.begin(), s.allowed.end(), (j + 1) % m) == s.allowed.end()) return false;
  }
  return true;
}

// g(x, t) = integral_0^x kappa(s) sqrt(t - s^m) ds along the segment, principal square root.
inline Complex hyperelliptic_g(int m, const Poly& kappa, Complex x, Complex t) {
  const ComplexPoly ck(kappa);
  // s = rho x with rho = 1 - v^2 removes the square-root endpoint singularity
  auto integrand = [&](double v) -> Complex {
    const double rho = 1 - v * v;
    const Complex s = rho * x;
    return ck(s) * std::sqrt(t - std::pow(s, m)) * x * (2 * v);
  };
  return boost::math::quadrature::gauss<double, 30>::integrate(integrand, 0.0, 1.0);
}

inline std::vector<Complex> hyperelliptic_xm_samples(int m, const ZeroCycle& c, const Poly& kappa,
                                                     const std::vector<Complex>& ts) {
  BranchSystem bs(Poly::monomial(1, m));
  std::vector<Complex> out;
  for (Complex t : ts) {
    auto x = bs.fiber_at(t);
    Complex s = 0;
    for (int i = 0; i < m; i++)
      if (c[i]) s += static_cast<double>(c[i]) * hyperelliptic_g(m, kappa, x[i], t);
    out.push_back(s);
  }
  return out;
}

struct HyperellipticReport {
  bool condition = false;
  bool numeric_vanishes = false;
  double worst_residual = 0;
  int samples = 0;
};

inline HyperellipticReport hyperelliptic_check(int m, const ZeroCycle& c, const Poly& kappa,
                                               const VanishingOptions& opt = {}) {
  HyperellipticReport rep;
  rep.condition = hyperelliptic_xm_condition(m, c, kappa);
  BranchSystem bs(Poly::monomial(1, m));
  std::vector<Complex> ts;
  for (Complex t : bs.sample_points(4 * opt.samples, opt.seed))
    if (std::abs(std::arg(t)) < 2.5 && static_cast<int>(ts.size()) < opt.samples) ts.push_back(t);
  for (Complex t : ts) {
    auto x = bs.fiber_at(t);
    Complex s = 0;
    double gmax = 0;
    for (int i = 0; i < m; i++) {
      const Complex gv = hyperelliptic_g(m, kappa, x[i], t);
      gmax = std::max(gmax, std::abs(gv));
      if (c[i]) s += static_cast<double>(c[i]) * gv;
    }
    const double denom = static_cast<double>(c.l1_norm()) * gmax;
    rep.worst_residual = std::max(rep.worst_residual, denom > 0 ? std::abs(s) / denom : 0.0);
  }
  rep.samples = static_cast<int>(ts.size());
  rep.numeric_vanishes = rep.worst_residual < opt.tolerance;
  return rep;
}

// ---- slow-fast systems ----

struct RationalFunction {
  Poly num, den;  // den monic, gcd(num, den) = 1

  static RationalFunction reduced(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return {Poly(), Poly{1}};
    const Poly g = gcd(num, den);
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
    const Rational lc = den.leading();
    return {num / lc, den / lc};
  }
  Complex operator()(Complex z) const { return num.eval(z) / den.eval(z); }
  std::string to_string() const { return "(" + num.to_string() + ")/(" + den.to_string() + ")"; }
};

namespace detail {

// The two real roots of f = t near 0 for f = z^2/2 + O(z^3), z1 < 0 < z2, continued from tiny t.
inline std::pair<double, double> morse_branches(const Poly& f, double t) {
  const ComplexPoly cf(f);
  auto newton = [&](double z, double level) {
    for (int it = 0; it < 60; it++) {
      auto [v, d] = cf.eval_d(z);
      const double dz = (v.real() - level) / d.real();
      z -= dz;
      if (std::abs(dz) < 1e-15 * (1 + std::abs(z))) break;
    }
    return z;
  };
  double level = std::min(t, 1e-8);
  double a = newton(-std::sqrt(2 * level), level), b = newton(std::sqrt(2 * level), level);
  while (level < t) {
    const double next = std::min(t, 1.5 * level);
    // the branches grow like sqrt(2t); rescale before correcting
    const double scale = std::sqrt(next / level);
    a = newton(a * scale, next);
    b = newton(b * scale, next);
    level = next;
  }
  if (!(a < 0 && b > 0) || !std::isfinite(a) || !std::isfinite(b))
    throw NumericalFailure("Morse branches did not straddle 0");
  return {a, b};
}

}  // namespace detail

// G = -(f')^2 / (g0'(h) h') for f = f0(h) with h equal on the two local branches.
inline RationalFunction slow_fast_gbar(const Poly& f, const Poly& h, const Poly& g0) {
  if (f[0] != 0 || f[1] != 0 || f[2] != Rational(1, 2))
    throw std::invalid_argument("slow_fast_gbar: f must be z^2/2 + O(z^3)");
  if (h.degree() < 1 || !outer_in_terms_of(f, h)) throw std::invalid_argument("slow_fast_gbar: f is not a polynomial in h");
  for (double t : {1e-3, 1e-2}) {
    auto [z1, z2] = detail::morse_branches(f, t);
    const double a = h.eval(Complex(z1)).real(), b = h.eval(Complex(z2)).real();
    if (std::abs(a - b) > 1e-8 * (1 + std::abs(a)))
      throw std::invalid_argument("slow_fast_gbar: h differs on the two local branches");
  }
  const Poly fp = f.derivative();
  const Poly den = compose(g0.derivative(), h) * h.derivative();
  if (den.is_zero()) throw std::invalid_argument("slow_fast_gbar: g0 must be nonconstant");
  return RationalFunction::reduced(-(fp * fp), den);
}

// I(t) = integral_{z1}^{z2} -(f')^2 / G dz between the local Morse branches.
inline std::vector<double> slow_fast_I(const Poly& f, const RationalFunction& gbar, const std::vector<double>& ts) {
  const Poly fp = f.derivative();
  const RationalFunction integrand = RationalFunction::reduced(-(fp * fp) * gbar.den, gbar.num);
  std::vector<double> out;
  for (double t : ts) {
    if (t <= 0) throw std::invalid_argument("slow_fast_I: t must be positive");
    auto [z1, z2] = detail::morse_branches(f, t);
    if (z2 - z1 < 1e-12) throw NumericalFailure("slow_fast_I: branches too close for quadrature");
    auto fn = [&](double x) { return integrand(Complex(x)).real(); };
    out.push_back(boost::math::quadrature::gauss<double, 30>::integrate(fn, z1, z2));
  }
  return out;
}

}  // namespace zerocycle
