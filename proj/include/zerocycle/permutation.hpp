#pragma once

// Permutations of {0..m-1}, stored as image arrays. Text and JSON forms are 1-indexed.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zerocycle {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
  }
  static Permutation identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }
  // i -> i+1 mod m
  static Permutation shift(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; i++) v[i] = (i + 1) % m;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // (a.then(b))(i) = b(a(i)): apply a first.
  Permutation then(const Permutation& b) const {
    if (b.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); i++) v[i] = b.img_[img_[i]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); i++) v[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(v));
  }

  // p^-1 . this . p, i.e. relabel i -> p(i)
  Permutation conjugate_by(const Permutation& p) const { return p.inverse().then(*this).then(p); }

  bool is_identity() const {
    for (size_t i = 0; i < img_.size(); i++)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool is_full_cycle() const {
    if (img_.empty()) return false;
    int len = 0, i = 0;
    do {
      i = img_[i];
      len++;
    } while (i != 0 && len <= size());
    return len == size();
  }

  // Cycle notation, 1-indexed, fixed points omitted: "(1 2 3)(4 5)"; identity is "()".
  std::string to_string() const {
    std::string s;
    std::vector<char> seen(img_.size(), 0);
    for (size_t i = 0; i < img_.size(); i++) {
      if (seen[i] || img_[i] == static_cast<int>(i)) continue;
      s += "(";
      size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        s += (first ? "" : " ") + std::to_string(j + 1);
        first = false;
        j = img_[j];
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Orbit of 0 under the group generated by gens covers everything.
inline bool is_transitive(const std::vector<Permutation>& gens, int m) {
  if (m <= 1) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int j = g(i);
      if (!seen[j]) {
        seen[j] = 1;
        count++;
        stack.push_back(j);
      }
    }
  }
  return count == m;
}

}  // namespace zerocycle
