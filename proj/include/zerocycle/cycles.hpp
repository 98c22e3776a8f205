#pragma once

// Zero cycles on a fiber, the polynomial P_{C,sigma}, and the balanced / totally unbalanced tests.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerocycle/decompose.hpp"
#include "zerocycle/linalg.hpp"
#include "zerocycle/monodromy.hpp"

namespace zerocycle {

class ZeroCycle {
 public:
  ZeroCycle() = default;
  explicit ZeroCycle(std::vector<long> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("cycle must have at least one point");
    if (std::accumulate(w_.begin(), w_.end(), 0L) != 0) throw std::invalid_argument("cycle weights must sum to zero");
  }
  static ZeroCycle trivial(int m) { return ZeroCycle(std::vector<long>(m, 0)); }
  // z_j - z_i (0-based labels)
  static ZeroCycle simple(int m, int i, int j) {
    std::vector<long> w(m, 0);
    w[i] -= 1;
    w[j] += 1;
    return ZeroCycle(std::move(w));
  }

  int m() const { return static_cast<int>(w_.size()); }
  long operator[](int i) const { return w_[i]; }
  const std::vector<long>& weights() const { return w_; }
  bool is_trivial() const {
    for (long v : w_)
      if (v) return false;
    return true;
  }
  long l1_norm() const {
    long s = 0;
    for (long v : w_) s += v < 0 ? -v : v;
    return s;
  }

  friend bool operator==(const ZeroCycle& a, const ZeroCycle& b) { return a.w_ == b.w_; }

 private:
  std::vector<long> w_;
};

// sum_k n_{p_k} z^(k-1) where p_1 = 1, p_{k+1} = sigma(p_k).
inline Poly p_poly(const ZeroCycle& c, const Permutation& sigma) {
  if (sigma.size() != c.m() || !sigma.is_full_cycle()) throw std::invalid_argument("p_poly: sigma must be an m-cycle");
  std::vector<Rational> co(c.m());
  int p = 0;
  for (int k = 0; k < c.m(); k++) {
    co[k] = c[p];
    p = sigma(p);
  }
  return Poly(std::move(co));
}

struct BalanceResult {
  bool balanced = true;
  std::optional<Permutation> witness;  // sigma with Phi_1 Phi_m not dividing P_{C,sigma}
};

inline BalanceResult is_balanced(const ZeroCycle& c, const std::vector<Permutation>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("is_balanced: Gamma must be nonempty");
  const int m = c.m();
  const Poly d = cyclotomic(1) * cyclotomic(m);
  BalanceResult r;
  for (const auto& s : gamma) {
    if (!divides_exact(d, p_poly(c, s))) {
      r.balanced = false;
      r.witness = s;
      return r;
    }
  }
  return r;
}

// Balanced against Gamma_m(f). tau_infinity is tried first: one failing sigma settles the
// question without enumerating the conjugacy class.
inline BalanceResult is_balanced(const ZeroCycle& c, const MonodromyData& data, long long cap = 1000000) {
  BalanceResult first = is_balanced(c, {data.tau_infinity});
  if (!first.balanced) return first;
  return is_balanced(c, conjugacy_class_tau(data, cap));
}

// Weight of each block (in block order) is the sum of the weights it contains.
inline ZeroCycle project_cycle(const ZeroCycle& c, const BlockSystem& bs) {
  if (bs.m != c.m()) throw std::invalid_argument("project_cycle: block system is for a different m");
  std::vector<long> w;
  for (const auto& b : bs.blocks) {
    long s = 0;
    for (int i : b) s += c[i];
    w.push_back(s);
  }
  return ZeroCycle(std::move(w));
}

enum class ProjectionKind { Trivial, Balanced, Unbalanced };

inline const char* to_string(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::Trivial: return "trivial";
    case ProjectionKind::Balanced: return "balanced";
    case ProjectionKind::Unbalanced: return "unbalanced";
  }
  return "";
}

struct ProjectionOutcome {
  int inner_degree = 0;
  Decomposition decomposition;
  ZeroCycle projected;
  ProjectionKind kind = ProjectionKind::Trivial;
  std::optional<Permutation> witness;  // for unbalanced projections
};

struct CycleClassification {
  bool trivial = false;
  bool balanced = false;
  bool totally_unbalanced = false;
  std::optional<Permutation> witness;                 // unbalanced C: sigma in Gamma with P not divisible
  std::optional<ProjectionOutcome> balanced_projection;  // not totally unbalanced: first balanced projection
  std::vector<ProjectionOutcome> projections;         // one per block size 1 < d < m
};

struct ClassifyOptions {
  long long cap = 1000000;
  MonodromyOptions monodromy;
};

// Projection through the inner factor of degree d; outer monodromy recomputed from f0 itself.
inline ProjectionOutcome classify_projection(const Poly& f, const ZeroCycle& c, const BlockSystem& bs,
                                             const MonodromyData& data, const ClassifyOptions& opt = {}) {
  ProjectionOutcome out;
  out.inner_degree = bs.block_size;
  out.decomposition = block_to_decomposition(f, bs, data);
  out.projected = project_cycle(c, bs);
  if (out.projected.is_trivial()) {
    out.kind = ProjectionKind::Trivial;
    return out;
  }
  const Poly& f0 = out.decomposition.outer;
  const int k = f0.degree();
  if (k < 2) {
    out.kind = ProjectionKind::Trivial;
    return out;
  }
  // pushforward of tau_infinity to the blocks must be a k-cycle
  std::vector<int> img(k);
  for (int b = 0; b < k; b++) img[b] = bs.block_of(data.tau_infinity(bs.blocks[b][0]));
  if (!Permutation(img).is_full_cycle()) throw NumericalFailure("pushforward of tau_infinity is not a cycle");
  MonodromyData d0 = monodromy_data(f0, opt.monodromy);
  BalanceResult br = is_balanced(out.projected, d0, opt.cap);
  out.kind = br.balanced ? ProjectionKind::Balanced : ProjectionKind::Unbalanced;
  out.witness = br.witness;
  return out;
}

inline CycleClassification is_totally_unbalanced(const Poly& f, const ZeroCycle& c, const MonodromyData& data,
                                                 const ClassifyOptions& opt = {}) {
  const int m = f.degree();
  if (c.m() != m) throw std::invalid_argument("cycle size differs from deg f");
  CycleClassification r;
  if (c.is_trivial()) {
    r.trivial = true;
    return r;
  }
  BalanceResult br = is_balanced(c, data, opt.cap);
  r.balanced = br.balanced;
  r.witness = br.witness;
  r.totally_unbalanced = !r.balanced;
  for (const auto& bs : block_systems(data)) {
    if (bs.block_size == 1 || bs.block_size == m) continue;
    ProjectionOutcome po = classify_projection(f, c, bs, data, opt);
    if (po.kind == ProjectionKind::Balanced && !r.balanced_projection) {
      r.totally_unbalanced = false;
      r.balanced_projection = po;
    }
    r.projections.push_back(std::move(po));
  }
  return r;
}

// Integer basis (Hermite normal form) of cycles whose projection through every inner factor
// z^p, p prime dividing m, is trivial; the equations use congruence-class blocks.
inline std::vector<ZeroCycle> trivial_projection_space(int m) {
  if (m < 2) throw std::invalid_argument("trivial_projection_space: m must be at least 2");
  RationalMatrix eq;
  for (int p : prime_divisors(m)) {
    const int k = m / p;
    for (int j = 0; j < k; j++) {
      std::vector<Rational> row(m);
      for (int i = j; i < m; i += k) row[i] = 1;
      eq.push_back(std::move(row));
    }
  }
  IntegerMatrix rows;
  for (const auto& v : nullspace(std::move(eq), m)) rows.push_back(primitive_integer(v));
  std::vector<ZeroCycle> out;
  for (const auto& row : hermite_normal_form(std::move(rows))) {
    std::vector<long> w;
    for (const auto& x : row) w.push_back(x.get_si());
    out.emplace_back(std::move(w));
  }
  return out;
}

// Dimension of the smallest subspace containing the weight vector and invariant under the group.
inline int orbit_span_dimension(const MonodromyData& data, const ZeroCycle& c) {
  const int m = c.m();
  if (c.is_trivial()) return 0;
  auto gens = data.generator_permutations();
  RationalSpan span(m);
  std::vector<Rational> v(m);
  for (int i = 0; i < m; i++) v[i] = c[i];
  span.add(v);
  for (size_t next = 0; next < span.basis().size(); next++) {
    for (const auto& g : gens) {
      const std::vector<Rational> b = span.basis()[next];
      std::vector<Rational> w(m);
      for (int i = 0; i < m; i++) w[g(i)] = b[i];
      span.add(std::move(w));
    }
  }
  return span.dimension();
}

}  // namespace zerocycle
