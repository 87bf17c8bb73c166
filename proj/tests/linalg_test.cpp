#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pgc/enumerate.hpp"
#include "pgc/subspace.hpp"
#include "test_util.hpp"

namespace pgc {
namespace {

const PrimeField F2(2), F3(3), F5(5);

TEST(MatrixProduct, Examples) {
  std::mt19937_64 rng(3);
  const auto m = testutil::random_matrix(F3, 3, 5, rng);
  EXPECT_EQ(Matrix::identity(F3, 3) * m, m);

  const auto swap = Matrix::from_rows(F2, {{0, 1}, {1, 0}});
  EXPECT_TRUE((swap * swap).is_identity());

  const auto a = companion_matrix(Polynomial::from_integers(F2, {1, 1, 0, 1}));
  const auto inv = matrix_inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((a * *inv).is_identity());
}

TEST(MatrixProduct, ShapeAndFieldMismatch) {
  EXPECT_THROW(Matrix(F2, 2, 3) * Matrix(F2, 2, 3), InvalidArgument);
  EXPECT_THROW(Matrix(F2, 2, 2) * Matrix(F3, 2, 2), InvalidArgument);
}

TEST(MatrixProduct, AgreesWithNaiveProduct) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testutil::random_matrix(F5, 3, 4, rng);
    const auto b = testutil::random_matrix(F5, 4, 2, rng);
    EXPECT_EQ(testutil::to_mat(a * b), oracle::mat_mul(testutil::to_mat(a), testutil::to_mat(b), 5));
  }
}

TEST(MatrixInverse, Examples) {
  auto id = matrix_inverse(Matrix::identity(F3, 4));
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->is_identity());

  auto two = matrix_inverse(Matrix::from_rows(F5, {{2}}));
  ASSERT_TRUE(two);
  EXPECT_EQ((*two)(0, 0), 3u);

  // Gauss-Jordan by hand for x^3 + x + 1: A^-1 = A^2 + 1 since A^3 + A = 1.
  const auto a = companion_matrix(Polynomial::from_integers(F2, {1, 1, 0, 1}));
  const auto expected = a * a + Matrix::identity(F2, 3);
  auto inv = matrix_inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, expected);
  EXPECT_TRUE((*inv * a).is_identity());
}

TEST(MatrixInverse, SingularIsDistinguishable) {
  EXPECT_FALSE(matrix_inverse(Matrix::from_rows(F3, {{1, 2}, {2, 1}})).has_value());
  EXPECT_FALSE(matrix_inverse(Matrix(F5, 3, 3)).has_value());
  EXPECT_THROW(matrix_inverse(Matrix(F5, 2, 3)), InvalidArgument);
}

TEST(MatrixInverse, RoundTripOnRandomMatrices) {
  std::mt19937_64 rng(9);
  for (const auto& f : {F2, F3, F5}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = testutil::random_matrix(f, 4, 4, rng);
      const auto inv = matrix_inverse(m);
      EXPECT_EQ(inv.has_value(), oracle::det_by_cofactors(testutil::to_mat(m), f.p()) != 0);
      EXPECT_EQ(is_invertible(m), inv.has_value());
      if (inv) {
        EXPECT_TRUE((m * *inv).is_identity());
        EXPECT_TRUE((*inv * m).is_identity());
      }
    }
  }
}

TEST(Determinant, MatchesCofactors) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testutil::random_matrix(F5, 4, 4, rng);
    EXPECT_EQ(static_cast<std::int64_t>(determinant(m)), oracle::det_by_cofactors(testutil::to_mat(m), 5));
  }
}

TEST(RankAndKernel, Examples) {
  const auto zero = rank_and_kernel(Matrix(F2, 3, 3));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.kernel, Subspace::full(F2, 3));

  const auto id = rank_and_kernel(Matrix::identity(F3, 4));
  EXPECT_EQ(id.rank, 4u);
  EXPECT_EQ(id.kernel.dim(), 0u);
}

TEST(RankAndKernel, DegenerateShapes) {
  const auto wide = rank_and_kernel(Matrix(F3, 0, 4));
  EXPECT_EQ(wide.rank, 0u);
  EXPECT_EQ(wide.kernel.ambient_dim(), 0u);
  const auto tall = rank_and_kernel(Matrix(F3, 3, 0));
  EXPECT_EQ(tall.rank, 0u);
  EXPECT_EQ(tall.kernel.dim(), 3u);
}

TEST(RankAndKernel, PropertiesOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (const auto& f : {F2, F3, F5}) {
    for (int trial = 0; trial < 150; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 6);
      const auto m = testutil::random_matrix(f, dim(rng), dim(rng), rng);
      const auto rk = rank_and_kernel(m);
      EXPECT_EQ(rk.rank, rank(transpose(m)));
      EXPECT_EQ(rk.rank, rank(m));
      EXPECT_EQ(rk.rank + rk.kernel.dim(), m.rows());
      for (std::size_t i = 0; i < rk.kernel.dim(); ++i) {
        const auto image = vec_mul(rk.kernel.basis().row(i), m);
        EXPECT_TRUE(std::all_of(image.begin(), image.end(), [](Scalar s) { return s == 0; }));
      }
    }
  }
}

TEST(Subspace, Examples) {
  const auto s = Subspace::span(F2, 3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_TRUE(s.contains(Vector{0, 0, 0}));
  EXPECT_EQ(s, Subspace::span(F2, 3, {{1, 1, 0}, {0, 1, 0}}));
  EXPECT_FALSE(s.contains(Vector{0, 0, 1}));
  EXPECT_THROW(s.contains(Vector{1, 0}), InvalidArgument);
}

TEST(Subspace, SumIntersectionAndContainment) {
  const auto s = Subspace::span(F3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const auto t = Subspace::span(F3, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ((s + t).dim(), 3u);
  EXPECT_EQ(s.intersection(t), Subspace::span(F3, 4, {{0, 1, 0, 0}}));
  EXPECT_TRUE(s.intersection(t).is_contained_in(s));
  EXPECT_FALSE(s.is_contained_in(t));
  EXPECT_THROW(s + Subspace::zero(F3, 3), InvalidArgument);
}

TEST(Subspace, DimensionFormulaOnRandomPairs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(0, 4);
    const auto s = Subspace::span(testutil::random_matrix(F3, dim(rng), 5, rng));
    const auto t = Subspace::span(testutil::random_matrix(F3, dim(rng), 5, rng));
    EXPECT_EQ((s + t).dim() + s.intersection(t).dim(), s.dim() + t.dim());
    const auto both = s.intersection(t);
    EXPECT_TRUE(both.is_contained_in(s) && both.is_contained_in(t));
  }
}

TEST(Subspace, QuotientCoordinatesVanishExactlyOnTheSubspace) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = Subspace::span(testutil::random_matrix(F5, 2, 4, rng));
    const auto v = testutil::random_matrix(F5, 1, 4, rng).row_vector(0);
    const auto q = s.quotient_coordinates(v);
    EXPECT_EQ(q.size(), 4 - s.dim());
    EXPECT_EQ(std::all_of(q.begin(), q.end(), [](Scalar x) { return x == 0; }), s.contains(v));
  }
}

TEST(EnumerateGl, Examples) {
  const auto g1 = enumerate_gl(1, F2);
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_TRUE(g1[0].is_identity());
  EXPECT_EQ(enumerate_gl(2, F2).size(), 6u);
  EXPECT_EQ(enumerate_gl(3, F2).size(), 168u);
  EXPECT_EQ(gl_order(3, F2), 168u);
  EXPECT_EQ(gl_order(3, F3), 11232u);
  EXPECT_EQ(gl_order(4, F2), 20160u);
  EXPECT_EQ(gl_order(4, F3), 24261120u);
}

TEST(EnumerateGl, NoDuplicatesAllInvertibleAscending) {
  for (auto [k, f] : {std::pair<std::size_t, PrimeField>{2, F3}, {3, F2}, {2, F5}}) {
    const auto all = enumerate_gl(k, f);
    EXPECT_EQ(all.size(), gl_order(k, f));
    std::set<Matrix> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(matrix_inverse(all[i]).has_value());
      if (i > 0) EXPECT_LT(encode_matrix(all[i - 1]), encode_matrix(all[i]));
    }
  }
}

TEST(EnumerateGl, PartitionsReassembleTheWhole) {
  const auto whole = enumerate_gl(3, F2);
  for (std::size_t parts : {1u, 2u, 3u, 7u, 64u}) {
    std::vector<Matrix> joined;
    for (auto r : partition_range(matrix_space_size(F2, 3, 3), parts)) {
      auto piece = enumerate_gl(3, F2, r);
      joined.insert(joined.end(), piece.begin(), piece.end());
    }
    EXPECT_EQ(joined, whole) << parts << " parts";
  }
}

TEST(EnumerateGl, GuardRequiresOverride) {
  EXPECT_THROW(enumerate_gl(4, F3, EnumerationOptions{1000, false}), GuardExceeded);
  EXPECT_EQ(enumerate_gl(2, F3, EnumerationOptions{10, true}).size(), gl_order(2, F3));
}

TEST(Encoding, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testutil::random_matrix(F3, 3, 3, rng);
    EXPECT_EQ(decode_matrix(F3, 3, 3, encode_matrix(m)), m);
  }
  EXPECT_EQ(encode_matrix(Matrix::from_rows(F2, {{1, 0}, {0, 0}})), 8u);
}

}  // namespace
}  // namespace pgc
