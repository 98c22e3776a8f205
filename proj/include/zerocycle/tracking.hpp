#pragma once

// Predictor-corrector continuation of polynomial fibers along paths in the t-plane.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zerocycle/errors.hpp"
#include "zerocycle/permutation.hpp"
#include "zerocycle/poly.hpp"

namespace zerocycle {

struct PathPiece {
  enum Kind { Line, Arc, Ray };
  Kind kind = Line;
  Complex a, b;              // Line and Ray endpoints
  Complex center;            // Arc
  double radius = 0, angle0 = 0, sweep = 0;

  static PathPiece line(Complex from, Complex to) { return {Line, from, to, {}}; }
  // Geometric interpolation a * (b/a)^s; for a real positive ratio this walks a ray in log scale.
  static PathPiece ray(Complex from, Complex to) { return {Ray, from, to, {}}; }
  static PathPiece arc(Complex center, double radius, double angle0, double sweep) {
    PathPiece p;
    p.kind = Arc;
    p.center = center;
    p.radius = radius;
    p.angle0 = angle0;
    p.sweep = sweep;
    return p;
  }

  Complex at(double s) const {
    switch (kind) {
      case Line: return a + s * (b - a);
      case Ray: return a * std::exp(s * std::log(b / a));
      case Arc: return center + std::polar(radius, angle0 + s * sweep);
    }
    return {};
  }
  Complex derivative(double s) const {
    switch (kind) {
      case Line: return b - a;
      case Ray: return at(s) * std::log(b / a);
      case Arc: return Complex(0, sweep) * std::polar(radius, angle0 + s * sweep);
    }
    return {};
  }
  Complex start() const { return kind == Arc ? at(0) : a; }
  Complex end() const { return kind == Arc ? at(1) : b; }
  PathPiece reversed() const {
    if (kind == Arc) return arc(center, radius, angle0 + sweep, -sweep);
    return {kind, b, a, {}};
  }
  // Distance from a point to this piece (arcs measured to the full circle when sweep covers it).
  double distance_to(Complex p) const {
    if (kind == Arc) {
      if (std::abs(sweep) >= 2 * std::numbers::pi - 1e-12) return std::abs(std::abs(p - center) - radius);
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 64; i++) best = std::min(best, std::abs(p - at(i / 64.0)));
      return best;
    }
    if (kind == Ray) {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 256; i++) best = std::min(best, std::abs(p - at(i / 256.0)));
      return best;
    }
    const Complex d = b - a;
    const double n2 = std::norm(d);
    double s = n2 > 0 ? std::real((p - a) * std::conj(d)) / n2 : 0;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * d));
  }
};

class Path {
 public:
  Path() = default;
  explicit Path(std::vector<PathPiece> pieces) : pieces_(std::move(pieces)) {}

  static Path segment(Complex from, Complex to) { return Path({PathPiece::line(from, to)}); }

  // t0 -> near point of the circle around center -> once around ccw -> back to t0.
  static Path loop(Complex t0, Complex center, double radius) {
    const Complex dir = (t0 - center) / std::abs(t0 - center);
    const Complex p = center + radius * dir;
    return Path({PathPiece::line(t0, p), PathPiece::arc(center, radius, std::arg(dir), 2 * std::numbers::pi),
                 PathPiece::line(p, t0)});
  }

  Path& append(const PathPiece& p) {
    pieces_.push_back(p);
    return *this;
  }
  Path& append(const Path& p) {
    pieces_.insert(pieces_.end(), p.pieces_.begin(), p.pieces_.end());
    return *this;
  }
  Path reversed() const {
    std::vector<PathPiece> r;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) r.push_back(it->reversed());
    return Path(std::move(r));
  }

  const std::vector<PathPiece>& pieces() const { return pieces_; }
  Complex start() const { return pieces_.front().start(); }
  Complex end() const { return pieces_.back().end(); }
  bool is_closed() const { return std::abs(start() - end()) <= 1e-12 * (1 + std::abs(start())); }
  double distance_to(Complex p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& q : pieces_) d = std::min(d, q.distance_to(p));
    return d;
  }

 private:
  std::vector<PathPiece> pieces_;
};

struct TrackOptions {
  double max_step = 0.05;   // in the piece parameter s in [0, 1]
  double min_step = 1e-12;
  double guard = 0.4;       // roots must move less than guard * min pairwise distance
  double ambiguity = 2.0;   // nearest other start root must be this many times farther than own start
  int newton_iterations = 8;
  double newton_tolerance = 1e-13;
};

struct HomotopyValue {
  Complex h, hz, hs;
  double scale;  // rounding scale of h at this point
};

// Fiber {z : f(z) = t(s)} along one path piece.
struct PathHomotopy {
  const ComplexPoly& f;
  const PathPiece& piece;
  HomotopyValue operator()(Complex z, double s) const {
    auto [v, d] = f.eval_d(z);
    const Complex t = piece.at(s);
    double sc = std::abs(t), az = std::abs(z);
    double acc = 0;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * az + std::abs(*it);
    return {v - t, d, -piece.derivative(s), sc + acc};
  }
};

struct TrackStats {
  int accepted = 0;
  int rejected = 0;
};

namespace detail {

inline double min_pairwise_distance(const std::vector<Complex>& z) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < z.size(); i++)
    for (size_t j = i + 1; j < z.size(); j++) d = std::min(d, std::abs(z[i] - z[j]));
  return d;
}

}  // namespace detail

// Continues every root of H(., 0) to H(., 1). H returns HomotopyValue at (z, s).
template <class Homotopy>
std::vector<Complex> track_homotopy(const Homotopy& H, std::vector<Complex> z, const TrackOptions& opt = {},
                                    TrackStats* stats = nullptr) {
  const size_t m = z.size();
  double s = 0, h = opt.max_step;
  std::vector<Complex> next(m);
  const double eps = std::numeric_limits<double>::epsilon();
  while (s < 1) {
    h = std::min({h, 1 - s, opt.max_step});
    const double dmin = m > 1 ? detail::min_pairwise_distance(z) : std::numeric_limits<double>::infinity();
    const double s1 = (1 - s - h < 1e-15) ? 1.0 : s + h;
    const double ds = s1 - s;
    bool ok = true;
    for (size_t i = 0; i < m && ok; i++) {
      HomotopyValue v0 = H(z[i], s);
      if (v0.hz == Complex(0, 0)) {
        ok = false;
        break;
      }
      Complex w = z[i] - ds * v0.hs / v0.hz;
      bool conv = false;
      for (int it = 0; it < opt.newton_iterations; it++) {
        HomotopyValue v = H(w, s1);
        if (v.hz == Complex(0, 0)) break;
        const Complex delta = v.h / v.hz;
        w -= delta;
        if (std::abs(delta) <= opt.newton_tolerance * (1 + std::abs(w)) || std::abs(v.h) <= 8 * eps * v.scale) {
          conv = true;
          break;
        }
      }
      if (!conv || !std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        ok = false;
        break;
      }
      const double moved = std::abs(w - z[i]);
      if (moved >= opt.guard * dmin) ok = false;
      next[i] = w;
    }
    if (ok && m > 1) {
      // each new root must sit unambiguously closest to its own start root
      for (size_t i = 0; i < m && ok; i++) {
        const double own = std::abs(next[i] - z[i]);
        for (size_t j = 0; j < m; j++) {
          if (j == i) continue;
          if (std::abs(next[i] - z[j]) <= opt.ambiguity * own) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      z.swap(next);
      s = s1;
      h *= 1.5;
      if (stats) stats->accepted++;
    } else {
      h *= 0.5;
      if (stats) stats->rejected++;
      if (h < opt.min_step)
        throw NumericalFailure("path tracking step size underflow at s = " + std::to_string(s) +
                               " (path too close to a critical value or guard violated)");
    }
  }
  return z;
}

struct TrackResult {
  std::vector<Complex> fiber;
  Permutation permutation;  // root i of the start fiber ends at root permutation(i) of the start fiber
  TrackStats stats;
};

// Label of each point of `end` in `reference`, requiring a clear nearest match.
inline Permutation match_fibers(const std::vector<Complex>& end, const std::vector<Complex>& reference) {
  const size_t m = end.size();
  const double dref = m > 1 ? detail::min_pairwise_distance(reference) : 1.0;
  std::vector<int> img(m, -1);
  std::vector<char> used(m, 0);
  for (size_t i = 0; i < m; i++) {
    size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < m; j++) {
      const double d = std::abs(end[i] - reference[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (bd > 0.25 * dref || used[best]) throw NumericalFailure("fiber matching is ambiguous after tracking");
    used[best] = 1;
    img[i] = static_cast<int>(best);
  }
  return Permutation(std::move(img));
}

inline TrackResult track_path(const ComplexPoly& f, const Path& path, const std::vector<Complex>& fiber,
                              const TrackOptions& opt = {}) {
  TrackResult r;
  std::vector<Complex> z = fiber;
  for (const auto& piece : path.pieces()) z = track_homotopy(PathHomotopy{f, piece}, std::move(z), opt, &r.stats);
  r.permutation = path.is_closed() ? match_fibers(z, fiber) : Permutation::identity(static_cast<int>(z.size()));
  r.fiber = std::move(z);
  return r;
}

inline TrackResult track_path(const Poly& f, const Path& path, const std::vector<Complex>& fiber,
                              const TrackOptions& opt = {}) {
  return track_path(ComplexPoly(f), path, fiber, opt);
}

}  // namespace zerocycle
