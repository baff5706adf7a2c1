#include <gtest/gtest.h>

#include "mnl/errors.hpp"
#include "mnl/sparse.hpp"

using namespace mnl;

namespace {

const GaussRational kI = GaussRational::i();

SparseMatrix from(std::size_t n, std::vector<SparseMatrix::Triplet> t) {
  return SparseMatrix::from_triplets(n, std::move(t));
}

// dense reference product
std::vector<GaussRational> dense_product(const SparseMatrix& a, const SparseMatrix& b) {
  const std::size_t n = a.size();
  std::vector<GaussRational> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

}  // namespace

TEST(Sparse, DuplicatesSumAndZerosDrop) {
  const SparseMatrix m = from(2, {{0, 1, Rational(1, 2)}, {0, 1, Rational(1, 2)}, {1, 0, 3}, {1, 0, -3}});
  EXPECT_EQ(m.nnz(), 1u);
  EXPECT_EQ(m.at(0, 1), GaussRational(1));
  EXPECT_EQ(m.den(), 1);
}

TEST(Sparse, CommonDenominatorIsCanonical) {
  const SparseMatrix a = from(2, {{0, 0, Rational(2, 6)}, {1, 1, GaussRational(0, Rational(1, 3))}});
  const SparseMatrix b = from(2, {{1, 1, kI * GaussRational(Rational(1, 3))}, {0, 0, Rational(1, 3)}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.den(), 3);
  EXPECT_EQ((a + a).den(), 3);
  EXPECT_EQ(a.scaled(3), from(2, {{0, 0, 1}, {1, 1, kI}}));
}

TEST(Sparse, ProductMatchesDenseReference) {
  const SparseMatrix a = from(3, {{0, 1, GaussRational(1, 2)}, {1, 2, Rational(1, 3)}, {2, 0, -kI}, {2, 2, 5}});
  const SparseMatrix b = from(3, {{1, 0, 7}, {2, 1, GaussRational(Rational(2, 5), 1)}, {0, 2, kI}});
  const SparseMatrix ab = a * b;
  const auto ref = dense_product(a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(ab.at(i, j), ref[i * 3 + j]);
  }
}

TEST(Sparse, CommutatorAndTranspose) {
  const SparseMatrix e = from(2, {{0, 1, 1}});
  const SparseMatrix f = e.transpose();
  EXPECT_EQ(f.at(1, 0), GaussRational(1));
  EXPECT_EQ(commutator(e, f), from(2, {{0, 0, 1}, {1, 1, -1}}));
  EXPECT_EQ(anticommutator(e, f), SparseMatrix::identity(2));
  EXPECT_TRUE(commutator(e, e).is_zero());
}

TEST(Sparse, FirstNonzeroLocatesResidual) {
  const SparseMatrix e = from(3, {{1, 2, 1}});
  const SparseMatrix f = e.transpose();
  const OperatorTerm terms[] = {{1, &e, &f}, {-1, &f, &e}, {-1, &e}};
  const auto hit = first_nonzero(terms, 3);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->row, 1u);
  EXPECT_EQ(hit->col, 1u);
  const SparseMatrix c = commutator(e, f);
  const OperatorTerm exact[] = {{1, &e, &f}, {-1, &f, &e}, {-1, &c}};
  EXPECT_FALSE(first_nonzero(exact, 3).has_value());
}

TEST(Sparse, SizeMismatchAndRangeAreInputErrors) {
  const SparseMatrix a(2), b(3);
  EXPECT_THROW(a + b, InputError);
  EXPECT_THROW(static_cast<void>(a.at(2, 0)), InputError);
  EXPECT_THROW(from(2, {{2, 0, 1}}), InputError);
}

TEST(Sparse, OverflowIsDetected) {
  const SparseMatrix big = from(1, {{0, 0, std::int64_t{1} << 40}});
  EXPECT_THROW(big * big, OverflowError);
}
