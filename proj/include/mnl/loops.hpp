#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnl/algebra.hpp"
#include "mnl/report.hpp"

namespace mnl {

/// Finite loop multiplication table. Elements are indices 0..n−1, index 0
/// is the unit, rows are the left factor: mul(a, b) = table[a][b].
class CayleyTable {
 public:
  /// Throws InputError on a non-square table or an out-of-range entry.
  CayleyTable(int order, std::vector<int> table, std::vector<std::string> names = {});

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  [[nodiscard]] const std::vector<int>& table() const { return table_; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  /// Label of element a; falls back to its index.
  [[nodiscard]] std::string name(int a) const;
  /// Index of the element with label `name`; throws InputError if absent.
  [[nodiscard]] int find(std::string_view name) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> names_;
};

/// Latin-square property. Witness: {row} or {column}, named in the detail.
LoopCheckReport is_quasigroup(const CayleyTable& t);
/// Index 0 acts as a two-sided unit. Witness: {g}.
LoopCheckReport has_unit(const CayleyTable& t);
/// (ag)(ha) = (a(gh))a for all triples plus two-sided inverses.
/// Throws PreconditionError unless the table is a quasigroup with unit 0.
/// Witness: {a, g, h} (lowest index first), or {g} for a missing inverse.
LoopCheckReport is_moufang(const CayleyTable& t);
/// (gh)a = g(ha) for all triples. Witness: {g, h, a}.
LoopCheckReport is_associative(const CayleyTable& t);

/// The unique x with g·x = e. Throws InputError if the row has no unit.
int right_inverse(const CayleyTable& t, int g);

/// ((g·h)·g⁻¹)·h⁻¹, bracketed from the left.
int loop_commutator(const CayleyTable& t, int g, int h);

CayleyTable cyclic_group(int n);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
/// Dihedral group of order 2n: elements r^k then s·r^k.
CayleyTable dihedral_group(int n);
CayleyTable quaternion_group();
/// S3 on permutations of {1,2,3} in cycle notation. Products compose left
/// to right: in gh, g acts first.
CayleyTable symmetric_group_s3();

/// M(G,2) on G ∪ Gu: g·h = gh, g·(hu) = (hg)u, (gu)·h = (gh⁻¹)u,
/// (gu)·(hu) = h⁻¹g. Element gu has index n + index(g).
/// Throws InputError unless `g` is a group table.
CayleyTable chein_double(const CayleyTable& g);

/// The 16 units ±1, ±e1..±e7 of the octonions: index k is +e_k (e_0 = 1),
/// index 8 + k is −e_k.
CayleyTable octonion_unit_loop();

struct NamedLoop {
  std::string name;
  CayleyTable table;
};

/// One representative of each group of order ≤ 8 (14 tables).
std::vector<NamedLoop> small_groups();

/// Catalog lookup: "z<n>", "z2xz2", "z2xz4", "z2xz2xz2", "s3", "d4", "q8",
/// "octonion-loop", "chein-<group>".
CayleyTable catalog_loop(std::string_view name);

/// Coordinate chart of an analytic loop around its unit (origin = 0).
struct ParamLoopChart {
  using Point = std::vector<double>;

  int dim = 0;
  std::function<Point(std::span<const double>, std::span<const double>)> multiply;
  std::function<Point(std::span<const double>)> invert;
};

/// v ∈ R^7, |v| < 1, ↦ the unit octonion (√(1−|v|²), v). Products are
/// projected back to their imaginary part; points outside the open unit ball
/// and products leaving the upper hemisphere throw InputError.
ParamLoopChart unit_octonion_chart();

/// R^r under addition.
ParamLoopChart additive_chart(int r);

enum class Bracketing { Left, Right };

/// ((gh)g⁻¹)h⁻¹ for Left, g(h(g⁻¹h⁻¹)) for Right, in chart coordinates.
ParamLoopChart::Point chart_commutator(const ParamLoopChart& chart, std::span<const double> g,
                                       std::span<const double> h, Bracketing b = Bracketing::Left);

/// Floating-point structure constants estimated from a chart.
struct NumericTensor {
  int dim = 0;
  std::vector<double> c;
  /// max |raw(i,j,k) + raw(i,k,j)| before antisymmetrization.
  double raw_asymmetry = 0.0;

  [[nodiscard]] double operator()(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
};

/// Central mixed difference of the commutator map at the unit:
///   c^i_jk ≈ [K(+j,+k) − K(−j,+k) − K(+j,−k) + K(−j,−k)]^i / (4·step²)
/// with K(±j, ±k) = commutator(±step·e_j, ±step·e_k), then antisymmetrized.
/// Requires 0 < step < 0.1.
NumericTensor tangent_structure_constants(const ParamLoopChart& chart, double step,
                                          Bracketing b = Bracketing::Left);

double max_abs_diff(const NumericTensor& a, const StructureTensor& b);
double max_abs_diff(const NumericTensor& a, const NumericTensor& b);

}  // namespace mnl
