#include <gtest/gtest.h>

#include <random>

#include "cbalg/linalg.hpp"
#include "test_util.hpp"

namespace {

using namespace cbalg;
using cbtest::mat;
using cbtest::vec;

const RationalField Q;
const PrimeField F3(3), F5(5);

TEST(Rref, Examples) {
  EXPECT_EQ(rref(mat(Q, {{0, 1}, {1, 0}})), mat(Q, {{1, 0}, {0, 1}}));
  EXPECT_EQ(rref(mat(Q, {{2, 4}})), mat(Q, {{1, 2}}));
  EXPECT_EQ(rref(mat(F5, {{1, 2}, {2, 4}})), mat(F5, {{1, 2}, {0, 0}}));
  const auto s = Subspace<PrimeField>::row_space(mat(F5, {{1, 2}, {2, 4}}));
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis(), mat(F5, {{1, 2}}));
}

TEST(Rref, IdempotentAndRankPreserving) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto m = cbtest::random_matrix(F3, 1 + t % 5, 1 + t % 6, rng);
    const auto r = rref(m);
    EXPECT_EQ(rref(r), r);
    EXPECT_EQ(rank(r), rank(m));
    EXPECT_EQ(Subspace<PrimeField>::row_space(r), Subspace<PrimeField>::row_space(m));
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel(Matrix<RationalField>::identity(Q, 3)).is_zero());
  EXPECT_TRUE(kernel(Matrix<RationalField>(Q, 2, 2)).is_full());
  const auto k = kernel(mat(Q, {{1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(k, Subspace<RationalField>::span(Q, 3, {vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})}));
}

TEST(Kernel, RandomF3AgainstEnumeration) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    const auto m = cbtest::random_matrix(F3, r, c, rng);
    const auto k = kernel(m);
    EXPECT_EQ(rank(m) + k.dim(), c);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
    std::size_t solutions = 0;
    for (const auto& v : cbtest::all_vectors(F3, c)) {
      if (is_zero(m.apply(v))) {
        ++solutions;
        EXPECT_TRUE(k.contains(v));
      }
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < k.dim(); ++i) expect *= 3;
    EXPECT_EQ(solutions, expect);
  }
}

TEST(Kernel, RationalEntries) {
  // x + 1/2 y - 2/3 z = 0
  Matrix<RationalField> m(Q, 1, 3);
  m(0, 0) = Q.one();
  m(0, 1) = Q.parse("1/2");
  m(0, 2) = Q.parse("-2/3");
  const auto k = kernel(m);
  ASSERT_EQ(k.dim(), 2u);
  for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
}

TEST(Lattice, Examples) {
  const auto u = Subspace<RationalField>::span(Q, 2, {vec(Q, {1, 0})});
  const auto v = Subspace<RationalField>::span(Q, 2, {vec(Q, {0, 1})});
  auto l = subspace_lattice(u, v);
  EXPECT_TRUE(l.sum.is_full());
  EXPECT_TRUE(l.intersection.is_zero());
  EXPECT_FALSE(l.u_contains_v);
  EXPECT_FALSE(l.equal);

  l = subspace_lattice(u, u);
  EXPECT_EQ(l.sum, u);
  EXPECT_EQ(l.intersection, u);
  EXPECT_TRUE(l.equal);
  EXPECT_TRUE(l.u_contains_v);

  const auto a = Subspace<RationalField>::span(Q, 3, {vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})});
  const auto b = Subspace<RationalField>::span(Q, 3, {vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})});
  l = subspace_lattice(a, b);
  EXPECT_EQ(l.intersection, Subspace<RationalField>::span(Q, 3, {vec(Q, {0, 1, 0})}));
  EXPECT_EQ(l.sum.dim() + l.intersection.dim(), 4u);
  EXPECT_TRUE(member(a, vec(Q, {2, -1, 0})));
  EXPECT_FALSE(member(a, vec(Q, {0, 0, 1})));
}

TEST(Lattice, DimensionMismatch) {
  const auto u = Subspace<RationalField>::zero(Q, 2);
  const auto v = Subspace<RationalField>::zero(Q, 3);
  try {
    subspace_lattice(u, v);
    ADD_FAILURE();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::dimension_mismatch);
  }
}

TEST(Lattice, ModularLawRandomPairs) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto u = cbtest::random_subspace(F3, n, rng), v = cbtest::random_subspace(F3, n, rng);
    const auto l = subspace_lattice(u, v);
    EXPECT_EQ(l.sum.dim() + l.intersection.dim(), u.dim() + v.dim());
    EXPECT_TRUE(l.sum.contains(u));
    EXPECT_TRUE(l.sum.contains(v));
    EXPECT_TRUE(u.contains(l.intersection));
    EXPECT_TRUE(v.contains(l.intersection));
  }
}

TEST(Lattice, IntersectionAgainstEnumeration) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto u = cbtest::random_subspace(F3, n, rng), v = cbtest::random_subspace(F3, n, rng);
    const auto w = intersection(u, v);
    for (const auto& x : cbtest::all_vectors(F3, n)) EXPECT_EQ(w.contains(x), u.contains(x) && v.contains(x));
  }
}

TEST(Subspace, CanonicalEquality) {
  const auto a = Subspace<RationalField>::span(Q, 3, {vec(Q, {1, 1, 0}), vec(Q, {0, 1, 1})});
  const auto b = Subspace<RationalField>::span(Q, 3, {vec(Q, {1, 2, 1}), vec(Q, {2, 0, -2}), vec(Q, {1, 1, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
  const auto z = Subspace<RationalField>::zero(Q, 4);
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_EQ(z.ambient_dim(), 4u);
}

TEST(Subspace, CoordinatesCombine) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto s = cbtest::random_subspace(Q, 5, rng);
    std::mt19937_64 r2(t);
    const auto c = cbtest::random_vector(Q, s.dim(), r2, 0.8);
    const auto v = s.combine(c);
    EXPECT_TRUE(s.contains(v));
    EXPECT_EQ(s.coordinates(v), c);
  }
}

TEST(Matrix, InverseAndProduct) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto m = cbtest::random_matrix(F5, 3, 3, rng, 0.7);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == 3);
    if (inv) {
      EXPECT_EQ(*inv * m, (Matrix<PrimeField>::identity(F5, 3)));
      EXPECT_EQ(m * *inv, (Matrix<PrimeField>::identity(F5, 3)));
    }
  }
}

}  // namespace
