#pragma once

// Zero-dimensional Abelian integrals sum_i n_i g(z_i(t)), their vanishing, the inductive
// tangential-center solver, and displacement functions of f + eps g.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zerocycle/cycles.hpp"
#include "zerocycle/decompose.hpp"
#include "zerocycle/monodromy.hpp"
#include "zerocycle/puiseux.hpp"

namespace zerocycle {

// Branches z_1..z_m of f^-1(t), labeled as in the monodromy data and transported from t0.
class BranchSystem {
 public:
  explicit BranchSystem(const Poly& f, const MonodromyOptions& opt = {})
      : data_(monodromy_data(f, opt)), cf_(f), opt_(opt) {}
  explicit BranchSystem(MonodromyData data, const MonodromyOptions& opt = {})
      : data_(std::move(data)), cf_(data_.f), opt_(opt) {}

  const MonodromyData& data() const { return data_; }
  const Poly& f() const { return data_.f; }
  int m() const { return data_.degree(); }
  Complex basepoint() const { return data_.basepoint; }

  // Fiber at t, continued along the straight segment from t0.
  std::vector<Complex> fiber_at(Complex t) const {
    if (std::abs(t - data_.basepoint) == 0) return data_.fiber;
    return track_path(cf_, Path::segment(data_.basepoint, t), data_.fiber, opt_.track).fiber;
  }

  // Fiber at the end of a path starting at t0.
  std::vector<Complex> fiber_along(const Path& path) const {
    if (std::abs(path.start() - data_.basepoint) > 1e-12 * (1 + std::abs(data_.basepoint)))
      throw std::invalid_argument("path must start at the basepoint");
    return track_path(cf_, path, data_.fiber, opt_.track).fiber;
  }

  // The segment t0 -> t stays at least one loop radius away from every critical value.
  bool is_safe(Complex t) const {
    const PathPiece seg = PathPiece::line(data_.basepoint, t);
    for (auto s : data_.critical_values)
      if (seg.distance_to(s) < data_.loop_radius) return false;
    return true;
  }

  // Reproducible pseudo-random sample points in the disk |t| < |t0| with safe segments.
  std::vector<Complex> sample_points(int n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rad(0.25, 0.95), ang(0, 2 * std::numbers::pi);
    const double r0 = std::abs(data_.basepoint);
    std::vector<Complex> out;
    for (int attempt = 0; static_cast<int>(out.size()) < n; attempt++) {
      if (attempt > 100000) throw NumericalFailure("could not place sample points away from critical values");
      const Complex t = std::polar(r0 * rad(rng), ang(rng));
      if (is_safe(t)) out.push_back(t);
    }
    return out;
  }

 private:
  MonodromyData data_;
  ComplexPoly cf_;
  MonodromyOptions opt_;
};

inline std::vector<Complex> integral_samples(const BranchSystem& bs, const Poly& g, const ZeroCycle& c,
                                             const std::vector<Complex>& ts) {
  if (c.m() != bs.m()) throw std::invalid_argument("cycle size differs from deg f");
  const ComplexPoly cg(g);
  std::vector<Complex> out;
  for (Complex t : ts) {
    if (c.is_trivial()) {
      out.emplace_back(0);
      continue;
    }
    auto z = bs.fiber_at(t);
    Complex s = 0;
    for (int i = 0; i < c.m(); i++)
      if (c[i]) s += static_cast<double>(c[i]) * cg(z[i]);
    out.push_back(s);
  }
  return out;
}

inline std::vector<Complex> integral_samples(const Poly& f, const Poly& g, const ZeroCycle& c,
                                             const std::vector<Complex>& ts) {
  return integral_samples(BranchSystem(f), g, c, ts);
}

struct VanishingOptions {
  int samples = 20;
  double tolerance = 1e-8;
  int order = 0;  // Puiseux order K; 0 means m (deg g + 2)
  std::uint64_t seed = 0x5eed2024;
};

struct VanishingEvidence {
  bool pass = true;
  bool numeric_pass = true;
  bool puiseux_pass = true;
  double worst_numeric_residual = 0;  // normalized by sum |n_i| max |g(z_i)|
  double worst_puiseux_residual = 0;  // max |s_k P_C(eps^k)| over nonvanishing terms
  int samples = 0;
  int order = 0;
  std::optional<int> first_failing_k;
};

namespace detail {

// P_C(eps_m^r) == 0 for each residue r, by exact cyclotomic division.
inline std::vector<char> cycle_root_zeros(const ZeroCycle& c) {
  const int m = c.m();
  const Poly P = p_poly(c, Permutation::shift(m));
  auto phi = cyclotomic_table(m);
  std::map<int, bool> by_order;
  std::vector<char> z(m);
  for (int r = 0; r < m; r++) {
    const int ord = m / std::gcd(m, r);
    auto it = by_order.find(ord);
    if (it == by_order.end()) it = by_order.emplace(ord, P.is_zero() || divides_exact(phi.at(ord), P)).first;
    z[r] = it->second;
  }
  return z;
}

inline Complex cycle_root_value(const ZeroCycle& c, int k) {
  const int m = c.m();
  Complex s = 0;
  for (int i = 0; i < m; i++) s += static_cast<double>(c[i]) * std::polar(1.0, 2 * std::numbers::pi * ((static_cast<long long>(i) * k) % m) / m);
  return s;
}

}  // namespace detail

// Semi-decision for sum n_i g(z_i(t)) == 0: sampled values and exact Puiseux conditions must both pass.
inline VanishingEvidence is_identically_zero(const BranchSystem& bs, const Poly& g, const ZeroCycle& c,
                                             const VanishingOptions& opt = {}) {
  VanishingEvidence ev;
  const int m = bs.m();
  if (c.m() != m) throw std::invalid_argument("cycle size differs from deg f");
  ev.order = opt.order > 0 ? opt.order : m * (std::max(g.degree(), 0) + 2);
  if (c.is_trivial() || g.is_constant()) return ev;

  // (b) exact Puiseux conditions
  const auto zeros = detail::cycle_root_zeros(c);
  const PuiseuxSeries ps = puiseux_of_g(bs.f(), g, ev.order);
  for (int k = ps.k_min; k <= ev.order; k++) {
    if (ps.coeff(k) == 0) continue;
    const int r = ((k % m) + m) % m;
    if (zeros[r]) continue;
    ev.puiseux_pass = false;
    if (!ev.first_failing_k) ev.first_failing_k = k;
    ev.worst_puiseux_residual = std::max(ev.worst_puiseux_residual, std::abs(ps.s(k)) * std::abs(detail::cycle_root_value(c, r)));
  }

  // (a) sampled values
  const ComplexPoly cg(g);
  const auto ts = bs.sample_points(opt.samples, opt.seed);
  ev.samples = static_cast<int>(ts.size());
  for (Complex t : ts) {
    auto z = bs.fiber_at(t);
    Complex s = 0;
    double gmax = 0;
    for (int i = 0; i < m; i++) {
      const Complex gv = cg(z[i]);
      gmax = std::max(gmax, std::abs(gv));
      if (c[i]) s += static_cast<double>(c[i]) * gv;
    }
    const double denom = static_cast<double>(c.l1_norm()) * gmax;
    const double res = denom > 0 ? std::abs(s) / denom : 0;
    ev.worst_numeric_residual = std::max(ev.worst_numeric_residual, res);
  }
  ev.numeric_pass = ev.worst_numeric_residual < opt.tolerance;
  ev.pass = ev.numeric_pass && ev.puiseux_pass;
  return ev;
}

inline VanishingEvidence is_identically_zero(const Poly& f, const Poly& g, const ZeroCycle& c,
                                             const VanishingOptions& opt = {}) {
  return is_identically_zero(BranchSystem(f), g, c, opt);
}

// g0 with g = g0(f), if any.
inline std::optional<Poly> theorem1_check(const Poly& f, const Poly& g) {
  if (f.degree() < 2) throw std::invalid_argument("theorem1_check: deg f must be at least 2");
  return outer_in_terms_of(g, f);
}

struct SimpleCycleSolution {
  Poly f0, g0, h;
};

// For the simple cycle z_j - z_i: the decomposition f = f0(h), g = g0(h) with h(z_i) = h(z_j), if any.
inline std::optional<SimpleCycleSolution> simple_cycle_solve(const Poly& f, const Poly& g, int i, int j,
                                                              const MonodromyData& data) {
  if (i == j) throw std::invalid_argument("simple_cycle_solve: labels must differ");
  const int m = f.degree();
  BlockSystem bs = minimal_block_system(data.generator_permutations(), m, {i, j});
  Decomposition dec = block_to_decomposition(f, bs, data);
  auto g0 = outer_in_terms_of(g, dec.inner);
  if (!g0) return std::nullopt;
  return SimpleCycleSolution{dec.outer, *g0, dec.inner};
}

inline bool morse_generic_check(const Poly& f) {
  if (f.degree() < 2) throw std::invalid_argument("morse_generic_check: deg f must be at least 2");
  const Poly fp = f.derivative();
  if (gcd(fp, fp.derivative()).degree() > 0) return false;
  return static_cast<int>(critical_values(f).size()) == fp.degree();
}

// ---- composition solver ----

struct PsiExtraction {
  Poly w;
  Decomposition decomposition;  // f = outer(inner)
  Poly g0;                      // w = g0(inner)
  PuiseuxSeries psi;
};

// Splits off the part of the series with exponents k = 0 mod m/c (inner degree d = m/c),
// recovers the polynomial w of degree <= degree_bound with w(z_1) equal to that part, and writes w = g0(h).
inline PsiExtraction extract_psi_and_w(const Poly& f, const PuiseuxSeries& s, int c, int degree_bound) {
  const int m = f.degree();
  if (c < 1 || m % c != 0 || c == m) throw std::invalid_argument("extract_psi_and_w: c must be a proper divisor index");
  const int d = m / c;
  PsiExtraction out;
  out.psi = s;
  for (int k = s.k_min; k <= s.k_max(); k++)
    if (((k % d) + d) % d != 0) out.psi.coeffs[k - s.k_min] = 0;

  // triangular matching against z_1^j, j = degree_bound .. 0
  const int order = s.k_max();
  const int n = order + degree_bound + 1;
  const Series y = detail::puiseux_y(f, n);
  std::vector<Series> ypow{Series{Rational(1)}};
  for (int j = 1; j <= degree_bound; j++) ypow.push_back(series_mul(ypow.back(), y, n));
  std::map<int, Rational> residual;  // exponent k -> coefficient
  for (int k = s.k_min; k <= order; k++)
    if (out.psi.coeff(k) != 0) residual[k] = out.psi.coeff(k);
  if (!residual.empty() && residual.begin()->first < -degree_bound)
    throw InconsistentEvidence("extract_psi_and_w: series starts below the degree bound");
  std::vector<Rational> wc(degree_bound + 1);
  for (int j = degree_bound; j >= 0; j--) {
    auto it = residual.find(-j);
    if (it == residual.end() || it->second == 0) continue;
    const Rational a = it->second;
    wc[j] = a;
    // z_1^j = u^-j Y^j
    for (int i = 0; i < static_cast<int>(ypow[j].size()) && i - j <= order; i++) {
      if (ypow[j][i] == 0) continue;
      Rational& r = residual[i - j];
      r -= a * ypow[j][i];
    }
  }
  for (auto& [k, v] : residual)
    if (v != 0)
      throw InconsistentEvidence("extract_psi_and_w: matching residual at exponent k = " + std::to_string(k) +
                                 " (order too small or the part is not a polynomial in z_1)");
  out.w = Poly(std::move(wc));
  auto dec = decompose_degree(f, d);
  if (!dec) throw InconsistentEvidence("extract_psi_and_w: f has no decomposition with inner degree " + std::to_string(d));
  out.decomposition = *dec;
  auto g0 = outer_in_terms_of(out.w, dec->inner);
  if (!g0) throw InconsistentEvidence("extract_psi_and_w: w is not a polynomial in the inner factor");
  out.g0 = *g0;
  return out;
}

enum class VanishingStatus { VanishesTrivial, VanishesWithResidualBalanced, DoesNotVanish, UndeterminedBalancedResidual };

inline const char* to_string(VanishingStatus s) {
  switch (s) {
    case VanishingStatus::VanishesTrivial: return "Vanishes-Trivial";
    case VanishingStatus::VanishesWithResidualBalanced: return "Vanishes-With-Residual-Balanced";
    case VanishingStatus::DoesNotVanish: return "Does-Not-Vanish";
    case VanishingStatus::UndeterminedBalancedResidual: return "Undetermined-Balanced-Residual";
  }
  return "";
}

struct BalancedResolution {
  std::string method;             // "zm-exact" or "numeric-evidence"
  bool vanishes = false;
  std::vector<int> allowed_residues;  // zm-exact only
  VanishingEvidence evidence;
};

struct CertificateTerm {
  Poly inner;  // h_k
  Poly outer;  // f_k with f = f_k(h_k)
  Poly g;      // g_k
  ZeroCycle projected;
  ProjectionKind kind = ProjectionKind::Trivial;
  std::optional<BalancedResolution> resolution;
};

struct VanishingCertificate {
  VanishingStatus status = VanishingStatus::DoesNotVanish;
  std::vector<CertificateTerm> terms;
  VanishingEvidence evidence;
  bool reconstruction_exact = false;  // sum g_k(h_k) == g
  std::vector<std::string> diagnostics;
};

struct SolveOptions {
  VanishingOptions vanishing;
  ClassifyOptions classify;
};

// f = a z^m + b
inline bool is_zm_form(const Poly& f) {
  for (int i = 1; i < f.degree(); i++)
    if (f[i] != 0) return false;
  return f.degree() >= 1;
}

// Residues j mod m for which z^j is allowed in g for f = z^m and a balanced cycle.
inline std::vector<int> zm_allowed_residues(const ZeroCycle& c) {
  auto z = detail::cycle_root_zeros(c);
  std::vector<int> out;
  for (int r = 0; r < c.m(); r++)
    if (z[r]) out.push_back(r);
  return out;
}

namespace detail {

inline BalancedResolution resolve_balanced(const Poly& f, const ZeroCycle& c, const Poly& g, const BranchSystem& bs,
                                           const VanishingEvidence& ev) {
  BalancedResolution r;
  r.evidence = ev;
  if (is_zm_form(f)) {
    r.method = "zm-exact";
    r.allowed_residues = zm_allowed_residues(c);
    auto z = cycle_root_zeros(c);
    const int m = c.m();
    r.vanishes = true;
    for (int j = 0; j <= g.degree(); j++)
      if (g[j] != 0 && !z[j % m]) r.vanishes = false;
  } else {
    r.method = "numeric-evidence";
    r.vanishes = ev.pass;
  }
  (void)bs;
  return r;
}

// Minimal elements of D(f) \ {1} under divisibility, increasing.
inline std::vector<int> minimal_inner_degrees(const Poly& f) {
  std::vector<int> ds;
  for (auto& [d, dec] : decomposition_set(f)) {
    if (d == 1) continue;
    bool minimal = true;
    for (int e : ds)
      if (d % e == 0) minimal = false;
    if (minimal) ds.push_back(d);
  }
  return ds;
}

inline std::vector<CertificateTerm> solve_terms(const Poly& f, const ZeroCycle& c, const Poly& g,
                                                const SolveOptions& opt, VanishingEvidence* top_evidence,
                                                std::vector<std::string>& diag, int depth);

}  // namespace detail

inline VanishingCertificate solve_tangential(const Poly& f, const ZeroCycle& c, const Poly& g,
                                             const SolveOptions& opt = {}) {
  if (f.degree() < 2) throw std::invalid_argument("solve_tangential: deg f must be at least 2");
  if (c.m() != f.degree()) throw std::invalid_argument("cycle size differs from deg f");
  VanishingCertificate cert;
  std::vector<CertificateTerm> terms =
      detail::solve_terms(f, c, g, opt, &cert.evidence, cert.diagnostics, 0);
  if (!cert.evidence.pass) {
    cert.status = VanishingStatus::DoesNotVanish;
    return cert;
  }
  cert.terms = std::move(terms);
  Poly sum;
  bool all_trivial = true, all_resolved = true;
  for (const auto& t : cert.terms) {
    sum += compose(t.g, t.inner);
    if (t.kind != ProjectionKind::Trivial) {
      all_trivial = false;
      if (!t.resolution || !t.resolution->vanishes) all_resolved = false;
    }
  }
  cert.reconstruction_exact = sum == g;
  if (!cert.reconstruction_exact) throw InconsistentEvidence("certificate terms do not reconstruct g");
  if (all_trivial)
    cert.status = VanishingStatus::VanishesTrivial;
  else if (all_resolved)
    cert.status = VanishingStatus::VanishesWithResidualBalanced;
  else
    cert.status = VanishingStatus::UndeterminedBalancedResidual;
  return cert;
}

namespace detail {

inline std::vector<CertificateTerm> solve_terms(const Poly& f, const ZeroCycle& c, const Poly& g,
                                                const SolveOptions& opt, VanishingEvidence* top_evidence,
                                                std::vector<std::string>& diag, int depth) {
  std::vector<CertificateTerm> terms;
  const int m = f.degree();
  const std::string where = "depth " + std::to_string(depth) + " (deg f = " + std::to_string(m) + "): ";
  if (c.is_trivial() || g.is_zero() || m < 2) {
    if (top_evidence) *top_evidence = VanishingEvidence{};
    if (!g.is_zero()) terms.push_back({Poly::z(), f, g, c, ProjectionKind::Trivial, std::nullopt});
    return terms;
  }
  BranchSystem bs(f, opt.classify.monodromy);
  VanishingEvidence ev = is_identically_zero(bs, g, c, opt.vanishing);
  if (top_evidence) *top_evidence = ev;
  if (!ev.pass) {
    if (ev.numeric_pass != ev.puiseux_pass)
      diag.push_back(where + "sampled and Puiseux evidence disagree (numeric " + (ev.numeric_pass ? "pass" : "fail") +
                     ", Puiseux " + (ev.puiseux_pass ? "pass" : "fail") + ")");
    if (depth > 0)
      throw InconsistentEvidence(where + "a projected integral that must vanish by construction did not");
    return terms;
  }

  BalanceResult br = is_balanced(c, bs.data(), opt.classify.cap);
  if (br.balanced) {
    CertificateTerm t{Poly::z(), f, g, c, ProjectionKind::Balanced, resolve_balanced(f, c, g, bs, ev)};
    terms.push_back(std::move(t));
    return terms;
  }

  // unbalanced: peel off the parts of g that factor through minimal inner factors
  PuiseuxSeries s = puiseux_of_g(f, g, ev.order);
  const int bound = g.degree();
  Poly rest = g;
  for (int d : minimal_inner_degrees(f)) {
    bool any = false;
    for (int k = s.k_min; k <= s.k_max(); k++)
      if (((k % d) + d) % d == 0 && s.coeff(k) != 0) any = true;
    if (!any) continue;
    PsiExtraction px = extract_psi_and_w(f, s, m / d, bound);
    for (int k = s.k_min; k <= s.k_max(); k++)
      if (((k % d) + d) % d == 0) s.coeffs[k - s.k_min] = 0;
    rest -= px.w;
    const BlockSystem blocks = congruence_block_system(m, d);
    block_to_decomposition(f, blocks, bs.data());  // numeric cross-check of the block/inner correspondence
    ZeroCycle proj = project_cycle(c, blocks);
    if (proj.is_trivial() || px.decomposition.outer.degree() < 2) {
      terms.push_back({px.decomposition.inner, px.decomposition.outer, px.g0, proj, ProjectionKind::Trivial, std::nullopt});
      continue;
    }
    std::vector<CertificateTerm> sub =
        solve_terms(px.decomposition.outer, proj, px.g0, opt, nullptr, diag, depth + 1);
    for (auto& t : sub) {
      t.inner = compose(t.inner, px.decomposition.inner);
      terms.push_back(std::move(t));
    }
  }
  for (int k = s.k_min; k <= s.k_max(); k++)
    if (s.coeff(k) != 0)
      throw InconsistentEvidence(where + "integral vanishes numerically but the Puiseux term k = " + std::to_string(k) +
                                 " belongs to no admissible inner factor");
  if (!rest.is_zero()) throw InconsistentEvidence(where + "extracted parts do not exhaust g");
  return terms;
}

}  // namespace detail

// ---- displacement ----

struct DisplacementOptions {
  int substeps = 16;
  TrackOptions track;
};

inline double default_displacement_epsilon(const BranchSystem& bs, const Poly& g) {
  double gm = 0;
  for (const auto& v : g.coeffs()) gm = std::max(gm, std::abs(v.get_d()));
  return 1e-3 * (1 + std::abs(bs.basepoint())) / (1 + gm);
}

struct EpsilonHomotopy {
  const ComplexPoly& f;
  const ComplexPoly& g;
  Complex t, eps;
  HomotopyValue operator()(Complex z, double s) const {
    auto [fv, fd] = f.eval_d(z);
    auto [gv, gd] = g.eval_d(z);
    const double az = std::abs(z);
    double acc = 0;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * az + std::abs(*it);
    return {fv + s * eps * gv - t, fd + s * eps * gd, eps * gv, acc + std::abs(t)};
  }
};

// Delta_eps(t) = sum n_i f(z_i(t, eps)), z_i(t, eps) continued in eps from z_i(t).
inline std::vector<Complex> displacement(const BranchSystem& bs, const Poly& g, const ZeroCycle& c, Complex eps,
                                         const std::vector<Complex>& ts, const DisplacementOptions& opt = {}) {
  if (c.m() != bs.m()) throw std::invalid_argument("cycle size differs from deg f");
  const ComplexPoly cf(bs.f()), cg(g);
  TrackOptions tr = opt.track;
  tr.max_step = std::min(tr.max_step, 1.0 / opt.substeps);
  std::vector<Complex> out;
  for (Complex t : ts) {
    if (c.is_trivial()) {
      out.emplace_back(0);
      continue;
    }
    std::vector<Complex> z = bs.fiber_at(t);
    try {
      z = track_homotopy(EpsilonHomotopy{cf, cg, t, eps}, std::move(z), tr);
    } catch (const NumericalFailure& e) {
      throw NumericalFailure(std::string("fiber collision during eps-homotopy: ") + e.what());
    }
    Complex s = 0;
    for (int i = 0; i < c.m(); i++)
      if (c[i]) s += static_cast<double>(c[i]) * cf(z[i]);
    out.push_back(s);
  }
  return out;
}

inline std::vector<Complex> displacement(const Poly& f, const Poly& g, const ZeroCycle& c, Complex eps,
                                         const std::vector<Complex>& ts, const DisplacementOptions& opt = {}) {
  return displacement(BranchSystem(f), g, c, eps, ts, opt);
}

}  // namespace zerocycle
