#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mnl/algebra.hpp"
#include "mnl/birep.hpp"
#include "mnl/qmatrix.hpp"
#include "mnl/report.hpp"
#include "mnl/sparse.hpp"

namespace mnl {

/// Fermion modes (A, x) on a lattice of N sites with n modes each. Mode
/// index is x·n + A; a basis state is a bit string, and the annihilator of
/// mode m carries the Jordan-Wigner sign (−1)^(occupied modes below m).
struct FockOps {
  int modes_per_site = 0;
  int sites = 0;
  std::size_t dim = 0;
  std::vector<SparseMatrix> a;
  std::vector<SparseMatrix> adag;

  [[nodiscard]] std::size_t mode(int A, int x) const { return static_cast<std::size_t>(x) * modes_per_site + A; }
};

inline constexpr int kMaxFockModes = 16;

/// Throws InputError unless n, N ≥ 1 and n·N ≤ 16.
FockOps build_fock(int n, int N);

/// {a_m, a†_m'} = δ_mm'·1 and {a,a} = {a†,a†} = 0 for every pair of modes.
/// Witness: {relation, m, m'} with relation 0 = {a,a†}, 1 = {a,a}, 2 = {a†,a†}.
CheckReport check_car(const FockOps& f);

/// u^A(x) = a_A(x) and p_A(x) = π·a†_A(x). The canonical choice is π = −i;
/// π is kept so densities and the bracket convention can be derived from it.
struct FieldSet {
  int modes_per_site = 0;
  int sites = 0;
  std::size_t dim = 0;
  GaussRational momentum_factor;
  std::vector<SparseMatrix> u;
  std::vector<SparseMatrix> p;

  [[nodiscard]] std::size_t mode(int A, int x) const { return static_cast<std::size_t>(x) * modes_per_site + A; }
};

FieldSet canonical_fields(const FockOps& f);
/// Same fields with p = factor·a†; used to probe the postulates.
FieldSet fields_with_momentum_factor(const FockOps& f, const GaussRational& factor);

/// Graded postulates: {p_A(x), u^B(y)} = −i δ_AB δ_xy·1, {u,u} = 0,
/// {p,p} = 0. Witness: {relation, A, x, B, y} with relation 0, 1, 2 in that
/// order.
CheckReport canonical_etc_check(const FieldSet& f);

/// Σ_AB p_A(x) M_AB u^B(x).
SparseMatrix density(const FieldSet& f, const QMatrix& kernel, int x);
/// Q(M) = Σ_AB a†_A(x) M_AB a_B(x), recovered from the fields as density / π.
SparseMatrix bilinear(const FieldSet& f, const QMatrix& kernel, int x);

/// Densities s_j(x), t_j(x) and the Yamagutian Y_jk(x) (j < k stored).
///
/// `bracket_factor` κ = π is the density bracket: [ρ(M), ρ(N)] = κ ρ([M,N])
/// whenever Q is a bracket homomorphism. It replaces the imaginary unit in
/// front of every δ term of the density algebra.
struct ChargeDensitySet {
  int r = 0;
  int modes_per_site = 0;
  int sites = 0;
  std::size_t dim = 0;
  GaussRational bracket_factor;
  StructureTensor c{1};  // set by charge_densities
  std::vector<SparseMatrix> s;  // x·r + j
  std::vector<SparseMatrix> t;
  std::vector<SparseMatrix> y;  // x·pairs + pair(j, k)

  [[nodiscard]] int pairs() const { return r * (r - 1) / 2; }
  [[nodiscard]] int pair(int j, int k) const { return j * r - j * (j + 1) / 2 + (k - j - 1); }
  [[nodiscard]] const SparseMatrix& s_at(int j, int x) const { return s[static_cast<std::size_t>(x) * r + j]; }
  [[nodiscard]] const SparseMatrix& t_at(int j, int x) const { return t[static_cast<std::size_t>(x) * r + j]; }
  /// Stored Y_jk(x) for j < k, −Y_kj(x) for j > k, zero for j = k.
  [[nodiscard]] SparseMatrix yamagutian(int j, int k, int x) const;
  /// Y_jk(x) = ⅓c^p_jk s_p − ⅓c^p_jk t_p − [s_j, t_k]/κ, any order of j, k.
  [[nodiscard]] SparseMatrix extract_yamagutian(int j, int k, int x) const;
};

/// Throws InputError if gen.dim differs from the modes per site or c.dim()
/// from gen.r.
ChargeDensitySet charge_densities(const FieldSet& f, const GeneratorSet& gen, const StructureTensor& c);

struct ETCReport {
  std::vector<std::pair<std::string, std::string>> conventions;
  std::vector<CheckReport> equations;
  /// Entries reported but excluded from passed().
  std::vector<std::string> informational;

  [[nodiscard]] bool is_informational(std::string_view eq) const;
  [[nodiscard]] bool passed() const;
  /// Throws std::out_of_range for an unknown entry.
  [[nodiscard]] const CheckReport& equation(std::string_view eq) const;
};

/// Checks the density algebra on-site with i ↦ κ:
///   "assoc-s", "assoc-t"  minimal violation of the associative forms
///   "symmetry"            [s_j, t_k] = [t_j, s_k]
///   "1"–"8"               the full relation set, with "3" the [t,t] reading
///   "3-as-printed"        the same right side read against [t_j, s_k]
///   "locality"            every commutator between sites vanishes
/// Witness for commutator entries: {j, k, x, y} (plus l, n where present);
/// the first nonzero matrix position is in the detail.
ETCReport etc_verify(const ChargeDensitySet& d, const StructureTensor& c);

/// σ_j = −i Σ_x s_j(x), τ_j likewise, Υ_jk = −i Σ_x Y_jk(x) (j < k stored).
/// `bracket_factor` λ = −iκ: [σ(M), σ(N)] = λ σ([M,N]).
struct ChargeSet {
  int r = 0;
  std::size_t dim = 0;
  GaussRational bracket_factor;
  std::vector<SparseMatrix> sigma;
  std::vector<SparseMatrix> tau;
  std::vector<SparseMatrix> upsilon;

  [[nodiscard]] int pair(int j, int k) const { return j * r - j * (j + 1) / 2 + (k - j - 1); }
  /// Stored Υ_jk for j < k, −Υ_kj for j > k, zero for j = k.
  [[nodiscard]] SparseMatrix upsilon_at(int j, int k) const;
};

ChargeSet charges(const ChargeDensitySet& d);

/// (σ/λ, τ/λ, Υ/λ) against the generalized Lie–Cartan table, i.e. every
/// relation [A, B] = λ·rhs. Families in order: "commutation", "mixed"
/// ([σ_j, τ_k] for all ordered pairs, which also fixes antisymmetry),
/// "cyclic", "reductivity", "yamaguti-lie". Witness: {family, indices...}.
CheckReport charge_algebra_check(const ChargeSet& q, const StructureTensor& c);

/// [Q(M), Q(N)] = Q([M, N]) for `trials` pairs of random integer matrices
/// with entries in [−3, 3] at site 0, seeded deterministically.
/// Witness: {trial}.
CheckReport bilinear_lemma_check(const FieldSet& f, int trials, std::uint64_t seed);
/// The same identity for one given pair.
CheckReport bilinear_lemma_check(const FieldSet& f, const QMatrix& m, const QMatrix& n);

}  // namespace mnl
