#pragma once

// Numerical monodromy of a polynomial: critical values, loop generators, tau_infinity,
// and the permutation-group side (conjugacy class of tau_infinity, block systems).

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "zerocycle/decompose.hpp"
#include "zerocycle/errors.hpp"
#include "zerocycle/permutation.hpp"
#include "zerocycle/puiseux.hpp"
#include "zerocycle/roots.hpp"
#include "zerocycle/tracking.hpp"

namespace zerocycle {

inline std::vector<Complex> critical_values(const Poly& f) {
  if (f.degree() < 2) throw std::invalid_argument("critical_values: deg f must be at least 2");
  std::vector<Complex> vals;
  for (auto& [factor, mult] : squarefree_decomposition(f.derivative())) {
    for (Complex c : roots_of(ComplexPoly(factor)).roots) vals.push_back(f.eval(c));
  }
  double scale = 0;
  for (auto v : vals) scale = std::max(scale, std::abs(v));
  const double tol = 1e-8 * (1 + scale);
  std::vector<Complex> out;
  for (auto v : vals) {
    bool dup = false;
    for (auto w : out)
      if (std::abs(v - w) <= tol) dup = true;
    if (!dup) out.push_back(v);
  }
  for (auto& v : out) {
    // snap values that are real or zero up to rounding
    if (std::abs(v.imag()) <= tol) v.imag(0);
    if (std::abs(v.real()) <= tol) v.real(0);
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

struct MonodromyOptions {
  TrackOptions track;
  double label_scale = 1e6;  // |t| ratio used to pin label 1 by the Puiseux series
};

struct MonodromyData {
  Poly f;
  Complex basepoint;
  double loop_radius = 0;
  std::vector<Complex> critical_values;  // in generator order
  std::vector<Complex> fiber;            // fiber[i] = z_{i+1}(t0)
  std::vector<std::pair<Complex, Permutation>> generators;
  Permutation tau_infinity;

  int degree() const { return f.degree(); }
  std::vector<Permutation> generator_permutations() const {
    std::vector<Permutation> g;
    for (auto& [s, p] : generators) g.push_back(p);
    return g;
  }
  // Product of the generators in order (first loop applied first).
  Permutation generator_product() const {
    Permutation p = Permutation::identity(degree());
    for (auto& [s, q] : generators) p = p.then(q);
    return p;
  }
  // Loop once around the critical value with this index.
  Path generator_path(size_t k) const { return Path::loop(basepoint, critical_values[k], loop_radius); }
  Path infinity_path() const {
    return Path({PathPiece::arc(0, std::abs(basepoint), std::arg(basepoint), 2 * std::numbers::pi)});
  }
};

namespace detail {

inline double segment_clearance(Complex t0, const std::vector<Complex>& sigma) {
  double c = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < sigma.size(); k++)
    for (size_t j = 0; j < sigma.size(); j++)
      if (j != k) c = std::min(c, PathPiece::line(t0, sigma[k]).distance_to(sigma[j]));
  return c;
}

inline double min_pairwise(const std::vector<Complex>& v) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); i++)
    for (size_t j = i + 1; j < v.size(); j++) d = std::min(d, std::abs(v[i] - v[j]));
  return d;
}

}  // namespace detail

inline MonodromyData monodromy_data(const Poly& f, const MonodromyOptions& opt = {}) {
  const int m = f.degree();
  if (m < 1) throw std::invalid_argument("monodromy_data: f must be nonconstant");
  MonodromyData data;
  data.f = f;
  const ComplexPoly cf(f);
  std::vector<Complex> sigma = m >= 2 ? critical_values(f) : std::vector<Complex>{};

  double R = 0;
  for (auto s : sigma) R = std::max(R, std::abs(s));
  const double r0 = 1 + 2 * R;
  const double sep = sigma.size() > 1 ? detail::min_pairwise(sigma) : std::numeric_limits<double>::infinity();
  // first angle in the fixed candidate list whose segments to Sigma stay clear of other critical values
  Complex t0 = r0, best = r0;
  double best_clear = -1;
  bool found = sigma.size() <= 1;
  for (int n = 0; n <= 20 && !found; n++) {
    const Complex cand = std::polar(r0, 0.3 * n);
    const double c = detail::segment_clearance(cand, sigma);
    if (c >= 0.5 * sep) {
      t0 = cand;
      found = true;
    } else if (c > best_clear) {
      best_clear = c;
      best = cand;
    }
  }
  if (!found) t0 = best;
  data.basepoint = t0;

  double rho = std::numeric_limits<double>::infinity();
  if (sigma.size() > 1) rho = std::min({rho, sep, detail::segment_clearance(t0, sigma)});
  for (auto s : sigma) rho = std::min(rho, std::abs(s - t0));
  data.loop_radius = 0.4 * rho;

  // generator order: increasing angle of sigma - t0 measured from the direction -t0
  std::sort(sigma.begin(), sigma.end(), [&](Complex a, Complex b) {
    return std::arg((a - t0) / (-t0)) < std::arg((b - t0) / (-t0));
  });
  data.critical_values = sigma;

  std::vector<Complex> raw = roots_of(cf - t0).roots;

  // tau_infinity on raw labels
  data.fiber = raw;
  Permutation tau_raw = track_path(cf, data.infinity_path(), raw, opt.track).permutation;
  if (!tau_raw.is_full_cycle()) throw NumericalFailure("loop around infinity did not give an m-cycle");

  // label 1: the root matching the Puiseux branch far out on the ray through t0, tracked back
  int first = 0;
  if (m > 1) {
    PuiseuxSeries z1 = puiseux_branch(f, 4 * m);
    double lambda = opt.label_scale * (1 + R);
    bool ok = false;
    for (int attempt = 0; attempt < 4 && !ok; attempt++, lambda *= 100) {
      const Complex tb = t0 * lambda;
      const Complex guess = z1.evaluate(tb, 0);
      std::vector<Complex> far = roots_of(cf - tb).roots;
      std::vector<std::pair<double, size_t>> d;
      for (size_t i = 0; i < far.size(); i++) d.emplace_back(std::abs(far[i] - guess), i);
      std::sort(d.begin(), d.end());
      if (d[0].first >= 0.25 * d[1].first) continue;
      std::vector<Complex> start{far[d[0].second]};
      std::vector<Complex> back = track_homotopy(PathHomotopy{cf, PathPiece::ray(tb, t0)}, start, opt.track);
      // nearest raw root
      size_t best_i = 0;
      for (size_t i = 1; i < raw.size(); i++)
        if (std::abs(raw[i] - back[0]) < std::abs(raw[best_i] - back[0])) best_i = i;
      first = static_cast<int>(best_i);
      ok = true;
    }
    if (!ok) throw NumericalFailure("could not identify the principal branch from its Puiseux series");
  }
  // relabel so that tau_infinity = (1 2 ... m)
  std::vector<int> raw_of(m), label_of(m);
  int r = first;
  for (int i = 0; i < m; i++) {
    raw_of[i] = r;
    label_of[r] = i;
    r = tau_raw(r);
  }
  data.fiber.assign(m, 0);
  for (int i = 0; i < m; i++) data.fiber[i] = raw[raw_of[i]];
  auto relabel = [&](const Permutation& p) {
    std::vector<int> img(m);
    for (int i = 0; i < m; i++) img[i] = label_of[p(raw_of[i])];
    return Permutation(std::move(img));
  };
  data.tau_infinity = relabel(tau_raw);

  for (size_t k = 0; k < sigma.size(); k++) {
    TrackResult tr = track_path(cf, data.generator_path(k), data.fiber, opt.track);
    data.generators.emplace_back(sigma[k], tr.permutation);
  }
  return data;
}

// Orbit of tau_infinity under conjugation by the generators.
inline std::vector<Permutation> conjugacy_class_tau(const MonodromyData& data, long long cap = 1000000) {
  std::unordered_set<Permutation, PermutationHash> seen{data.tau_infinity};
  std::vector<Permutation> order{data.tau_infinity};
  auto gens = data.generator_permutations();
  for (size_t i = 0; i < order.size(); i++) {
    for (const auto& g : gens) {
      Permutation c = order[i].conjugate_by(g);
      if (seen.insert(c).second) {
        order.push_back(c);
        if (static_cast<long long>(order.size()) > cap) throw CapExceeded("conjugacy class cap", cap);
      }
    }
  }
  return order;
}

struct BlockSystem {
  int m = 0;
  int block_size = 0;
  std::vector<std::vector<int>> blocks;  // sorted, ordered by smallest element

  int block_of(int i) const {
    for (size_t b = 0; b < blocks.size(); b++)
      if (std::find(blocks[b].begin(), blocks[b].end(), i) != blocks[b].end()) return static_cast<int>(b);
    return -1;
  }
  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks == b.blocks; }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

inline BlockSystem to_block_system(UnionFind& uf, int m) {
  std::map<int, std::vector<int>> cls;
  for (int i = 0; i < m; i++) cls[uf.find(i)].push_back(i);
  BlockSystem bs;
  bs.m = m;
  for (auto& [root, v] : cls) bs.blocks.push_back(v);
  std::sort(bs.blocks.begin(), bs.blocks.end());
  bs.block_size = static_cast<int>(bs.blocks.front().size());
  return bs;
}

}  // namespace detail

// Finest block system in which all of `seed` lies in one block (Atkinson's closure).
inline BlockSystem minimal_block_system(const std::vector<Permutation>& gens, int m, const std::vector<int>& seed) {
  detail::UnionFind uf(m);
  std::vector<std::pair<int, int>> queue;
  for (size_t i = 1; i < seed.size(); i++) {
    int a = uf.find(seed[0]), b = uf.find(seed[i]);
    if (uf.unite(a, b)) queue.emplace_back(a, b);
  }
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      int x = uf.find(g(a)), y = uf.find(g(b));
      if (uf.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  return detail::to_block_system(uf, m);
}

// All block systems of the transitive group generated by gens, by increasing block size.
inline std::vector<BlockSystem> block_systems(const std::vector<Permutation>& gens, int m) {
  std::vector<BlockSystem> out;
  auto add = [&](BlockSystem bs) {
    if (std::find(out.begin(), out.end(), bs) == out.end()) {
      out.push_back(std::move(bs));
      return true;
    }
    return false;
  };
  BlockSystem single;
  single.m = m;
  single.block_size = 1;
  for (int i = 0; i < m; i++) single.blocks.push_back({i});
  add(single);
  for (int j = 1; j < m; j++) add(minimal_block_system(gens, m, {0, j}));
  // joins of systems are systems
  for (bool grew = true; grew;) {
    grew = false;
    const size_t n = out.size();
    for (size_t a = 0; a < n; a++)
      for (size_t b = a + 1; b < n; b++) {
        std::vector<int> seed = out[a].blocks[out[a].block_of(0)];
        for (int x : out[b].blocks[out[b].block_of(0)]) seed.push_back(x);
        if (add(minimal_block_system(gens, m, seed))) grew = true;
      }
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& x, const BlockSystem& y) {
    return x.block_size != y.block_size ? x.block_size < y.block_size : x.blocks < y.blocks;
  });
  return out;
}

inline std::vector<BlockSystem> block_systems(const MonodromyData& data) {
  return block_systems(data.generator_permutations(), data.degree());
}

// Congruence classes mod m/d, the block system of a size-d inner factor in tau_infinity labels.
inline BlockSystem congruence_block_system(int m, int d) {
  if (d < 1 || m % d) throw std::invalid_argument("block size must divide m");
  BlockSystem bs;
  bs.m = m;
  bs.block_size = d;
  const int k = m / d;
  for (int j = 0; j < k; j++) {
    std::vector<int> b;
    for (int i = j; i < m; i += k) b.push_back(i);
    bs.blocks.push_back(b);
  }
  return bs;
}

// The decomposition whose inner factor is constant on the blocks, checked on the fiber.
inline Decomposition block_to_decomposition(const Poly& f, const BlockSystem& bs, const MonodromyData& data) {
  auto dec = decompose_degree(f, bs.block_size);
  if (!dec) throw NumericalFailure("no decomposition with inner degree " + std::to_string(bs.block_size));
  double scale = 0;
  std::vector<Complex> hv;
  for (auto z : data.fiber) {
    hv.push_back(dec->inner.eval(z));
    scale = std::max(scale, std::abs(hv.back()));
  }
  const double tol = 1e-8 * (1 + scale);
  for (const auto& b : bs.blocks)
    for (int i : b)
      if (std::abs(hv[i] - hv[b[0]]) > tol)
        throw NumericalFailure("inner factor is not constant on a block of the system");
  return *dec;
}

}  // namespace zerocycle
