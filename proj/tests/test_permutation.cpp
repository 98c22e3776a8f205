#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace zt;

static Permutation random_perm(Gen& gen, int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), gen.engine());
  return Permutation(v);
}

TEST(Permutation, ComposeInverseConjugate) {
  Gen gen(41);
  for (int trial = 0; trial < 100; trial++) {
    const int m = gen.integer(1, 9);
    Permutation a = random_perm(gen, m), b = random_perm(gen, m), c = random_perm(gen, m);
    EXPECT_TRUE(a.then(a.inverse()).is_identity());
    EXPECT_EQ(a.then(b).then(c), a.then(b.then(c)));
    for (int i = 0; i < m; i++) EXPECT_EQ(a.then(b)(i), b(a(i)));
    // conjugation preserves cycle type
    EXPECT_EQ(a.conjugate_by(b).is_full_cycle(), a.is_full_cycle());
    const Permutation ab = a.conjugate_by(b);
    for (int i = 0; i < m; i++) EXPECT_EQ(ab(b(i)), b(a(i)));
  }
}

TEST(Permutation, ShiftAndStrings) {
  EXPECT_TRUE(Permutation::shift(5).is_full_cycle());
  EXPECT_EQ(Permutation::shift(4).to_string(), "(1 2 3 4)");
  EXPECT_EQ(Permutation({1, 0, 3, 2}).to_string(), "(1 2)(3 4)");
  EXPECT_EQ(Permutation::identity(3).to_string(), "()");
  EXPECT_FALSE(Permutation({1, 0, 3, 2}).is_full_cycle());
}

TEST(Permutation, Transitivity) {
  EXPECT_TRUE(is_transitive({Permutation::shift(6)}, 6));
  EXPECT_FALSE(is_transitive({Permutation({1, 0, 3, 2})}, 4));
  EXPECT_TRUE(is_transitive({Permutation({1, 0, 2, 3}), Permutation({0, 2, 3, 1})}, 4));
}
