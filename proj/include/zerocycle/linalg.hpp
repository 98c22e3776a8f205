#pragma once

// Exact linear algebra over Q and Z: reduced row echelon form, nullspaces, Hermite normal form.

#include <algorithm>
#include <vector>

#include "zerocycle/poly.hpp"

namespace zerocycle {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

// In-place RREF; returns pivot columns.
inline std::vector<int> rref(RationalMatrix& a, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int col = 0; col < cols && row < rows; col++) {
    int sel = -1;
    for (int r = row; r < rows; r++)
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = 1 / a[row][col];
    for (int c = col; c < cols; c++)
      if (a[row][c] != 0) a[row][c] *= inv;
    std::vector<int> nz;
    for (int c = col; c < cols; c++)
      if (a[row][c] != 0) nz.push_back(c);
    for (int r = 0; r < rows; r++) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (int c : nz) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    row++;
  }
  a.resize(row);
  return pivots;
}

inline int rank(RationalMatrix a, int cols) { return static_cast<int>(rref(a, cols).size()); }

// Basis of {x : a x = 0}, one vector per free column (that coordinate set to 1).
inline RationalMatrix nullspace(RationalMatrix a, int cols) {
  std::vector<int> piv = rref(a, cols);
  std::vector<char> is_pivot(cols, 0);
  for (int p : piv) is_pivot[p] = 1;
  RationalMatrix basis;
  for (int free = 0; free < cols; free++) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (size_t r = 0; r < piv.size(); r++) v[piv[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Smallest primitive integer multiple of a rational vector.
inline std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (size_t i = 0; i < v.size(); i++) {
    Rational s = v[i] * Rational(l);
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Row-style Hermite normal form of the lattice spanned by the rows: upper echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
inline IntegerMatrix hermite_normal_form(IntegerMatrix a) {
  if (a.empty()) return a;
  const int cols = static_cast<int>(a[0].size());
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int col = 0; col < cols && row < rows; col++) {
    // Euclid on column col among rows row..end
    while (true) {
      int sel = -1;
      for (int r = row; r < rows; r++)
        if (a[r][col] != 0 && (sel < 0 || abs(a[r][col]) < abs(a[sel][col]))) sel = r;
      if (sel < 0) break;
      std::swap(a[row], a[sel]);
      bool done = true;
      for (int r = row + 1; r < rows; r++) {
        if (a[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[row][col].get_mpz_t());
        for (int c = col; c < cols; c++) a[r][c] -= q * a[row][c];
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (int c = col; c < cols; c++) a[row][c] = -a[row][c];
    for (int r = 0; r < row; r++) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[row][col].get_mpz_t());
      if (q != 0)
        for (int c = col; c < cols; c++) a[r][c] -= q * a[row][c];
    }
    row++;
  }
  a.resize(row);
  return a;
}

// Incrementally grown subspace of Q^n kept in reduced echelon form.
class RationalSpan {
 public:
  explicit RationalSpan(int n) : n_(n) {}

  int dimension() const { return static_cast<int>(rows_.size()); }
  const RationalMatrix& basis() const { return rows_; }

  // Reduces v against the basis; returns true (and stores it) if v was outside the span.
  bool add(std::vector<Rational> v) {
    for (size_t r = 0; r < rows_.size(); r++) {
      const int p = piv_[r];
      if (v[p] == 0) continue;
      const Rational f = v[p];
      for (int c = 0; c < n_; c++)
        if (rows_[r][c] != 0) v[c] -= f * rows_[r][c];
    }
    int p = -1;
    for (int c = 0; c < n_; c++)
      if (v[c] != 0) {
        p = c;
        break;
      }
    if (p < 0) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (size_t r = 0; r < rows_.size(); r++) {
      if (rows_[r][p] == 0) continue;
      const Rational f = rows_[r][p];
      for (int c = 0; c < n_; c++)
        if (v[c] != 0) rows_[r][c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  int n_;
  RationalMatrix rows_;
  std::vector<int> piv_;
};

}  // namespace zerocycle
