#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnl/qmatrix.hpp"
#include "mnl/rational.hpp"
#include "mnl/report.hpp"

namespace mnl {

/// Coordinates of an element of the tangent algebra in the basis e_1..e_r.
using TangentVector = QVector;

/// Structure constants c^i_jk of an anticommutative algebra, [e_j, e_k] =
/// Σ_i c^i_jk e_i. Indices are 0-based in code; JSON and printed labels are
/// 1-based. Antisymmetry in (j, k) is enforced at construction.
class StructureTensor {
 public:
  struct Entry {
    int i;
    int j;
    int k;
    Rational value;
  };

  explicit StructureTensor(int dim);
  /// Dense constructor; throws InputError unless c[i][j][k] = −c[i][k][j].
  StructureTensor(int dim, std::vector<Rational> dense);
  /// Sparse constructor with antisymmetric completion. An entry that
  /// contradicts another (explicitly or through its partner) is an InputError.
  static StructureTensor from_entries(int dim, std::span<const Entry> entries);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Rational& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }

  /// Copy with c[i][j][k] = v and c[i][k][j] = −v.
  [[nodiscard]] StructureTensor with_entry(int i, int j, int k, const Rational& v) const;
  [[nodiscard]] StructureTensor scaled(const Rational& s) const;
  /// Nonzero entries with j < k, in lexicographic (i, j, k) order.
  [[nodiscard]] std::vector<Entry> upper_entries() const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_;
  std::vector<Rational> c_;
};

TangentVector basis_vector(int dim, int a);

/// [x, y]^i = Σ c^i_jk x^j y^k.
TangentVector bracket(const StructureTensor& c, std::span<const Rational> x, std::span<const Rational> y);

/// J(x,y,z) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
TangentVector jacobiator(const StructureTensor& c, std::span<const Rational> x, std::span<const Rational> y,
                         std::span<const Rational> z);

/// Jacobi identity on all basis triples. Witness: (a, b, c), 0-based.
CheckReport is_lie(const StructureTensor& c);

/// Mal'tsev identity [J(x,y,z),x] = J(x,y,[x,z]) checked for x in
/// {e_a} ∪ {e_a + e_b : a < b} and basis y, z. The identity is quadratic in
/// x and linear in y, z, so this set polarizes it completely.
/// Witness: (a, b, y, z) with b = −1 when x = e_a.
CheckReport is_maltsev(const StructureTensor& c);

/// Catalog: "abelian(r)", "su2", "sl2", "m7".
StructureTensor catalog_algebra(std::string_view name);

}  // namespace mnl
