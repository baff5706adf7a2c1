#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mnl/rational.hpp"

namespace mnl {

struct OperatorTerm;

/// Exact square sparse matrix over Q(i), stored as CSR over Gaussian
/// integers with one positive common denominator: value(i,j) = entry/den.
/// Canonical after every operation (sorted columns, no stored zeros, den
/// coprime to the entries), so structural equality is value equality.
class SparseMatrix {
 public:
  struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;
    friend bool operator==(const GaussInt&, const GaussInt&) = default;
  };

  struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    GaussRational value;
  };

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t n);

  static SparseMatrix identity(std::size_t n);
  /// Duplicate positions are summed.
  static SparseMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t nnz() const { return cols_.size(); }
  [[nodiscard]] bool is_zero() const { return cols_.empty(); }
  [[nodiscard]] GaussRational at(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::vector<Triplet> triplets() const;
  [[nodiscard]] SparseMatrix transpose() const;
  [[nodiscard]] SparseMatrix scaled(const GaussRational& s) const;

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  // Raw CSR access for the kernels below.
  [[nodiscard]] std::span<const std::uint32_t> row_ptr() const { return row_ptr_; }
  [[nodiscard]] std::span<const std::uint32_t> cols() const { return cols_; }
  [[nodiscard]] std::span<const GaussInt> vals() const { return vals_; }
  [[nodiscard]] std::int64_t den() const { return den_; }

 private:
  friend SparseMatrix combine(std::span<const OperatorTerm> terms, std::size_t n);
  void canonicalize();

  std::size_t n_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::uint32_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<GaussInt> vals_;
};

/// w · A · B, or w · A when `right` is null.
struct OperatorTerm {
  GaussRational weight;
  const SparseMatrix* left;
  const SparseMatrix* right = nullptr;
};

/// Σ terms as a matrix.
SparseMatrix combine(std::span<const OperatorTerm> terms, std::size_t n);

/// First nonzero (row, col) of Σ terms, or nullopt if the sum vanishes. The
/// sum is accumulated row by row and never materialized.
struct Position {
  std::uint32_t row;
  std::uint32_t col;
};
std::optional<Position> first_nonzero(std::span<const OperatorTerm> terms, std::size_t n);

/// [A, B] = AB − BA.
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);
/// {A, B} = AB + BA.
SparseMatrix anticommutator(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace mnl
