#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mnl/rational.hpp"

namespace mnl {

using QVector = std::vector<Rational>;

/// Dense exact rational matrix, row-major. Sizes here stay small (≤ 16),
/// so no attempt is made at blocking or sparsity.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const Rational> flat() const { return data_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] QVector apply(std::span<const Rational> v) const;
  [[nodiscard]] std::string str() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [A, B] = AB − BA.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Incrementally maintained echelon basis of a subspace of Q^n.
///
/// Each stored row is reduced against all earlier rows at insertion, so a
/// single forward sweep reduces any vector to its residual modulo the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  /// Residual of v after elimination against the stored rows; zero iff v is
  /// in the span.
  [[nodiscard]] QVector reduce(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  /// Inserts v if it is independent of the current span; returns whether the
  /// rank grew.
  bool insert(std::span<const Rational> v);

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t ambient() const { return ambient_; }

 private:
  std::size_t ambient_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form in place, pivoting on the leftmost available
/// column. Returns the pivot column of each surviving row; zero rows are
/// dropped.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t cols);

std::size_t rank(std::vector<QVector> rows, std::size_t cols);

}  // namespace mnl
