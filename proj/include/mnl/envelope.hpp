#pragma once

#include <string>
#include <vector>

#include "mnl/algebra.hpp"
#include "mnl/birep.hpp"
#include "mnl/qmatrix.hpp"
#include "mnl/report.hpp"

namespace mnl {

/// d^p_jkl with 6 d^p_jkl = c^p_js c^s_kl − c^p_ks c^s_jl + c^p_sl c^s_jk.
class YamagutiTensor {
 public:
  explicit YamagutiTensor(int dim);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Rational& operator()(int p, int j, int k, int l) const { return d_[index(p, j, k, l)]; }
  Rational& operator()(int p, int j, int k, int l) { return d_[index(p, j, k, l)]; }

 private:
  [[nodiscard]] std::size_t index(int p, int j, int k, int l) const {
    return ((static_cast<std::size_t>(p) * dim_ + j) * dim_ + k) * dim_ + l;
  }

  int dim_;
  std::vector<Rational> d_;
};

YamagutiTensor yamaguti_constants(const StructureTensor& c);

/// Element of the envelope in its reduced basis.
using EnvelopeVector = QVector;

/// Abstract Lie algebra spanned by S_1..S_r, T_1..T_r and Y_jk (j < k)
/// modulo the cyclic Yamaguti relations.
///
/// Basis order is S_1..S_r, T_1..T_r, then the independent Y_jk in
/// lexicographic order. Dependent Y's are eliminated by reduced row echelon
/// form with columns in lexicographic (j, k) order, so the lexicographically
/// earliest Y's become pivots and are expressed through later ones.
struct EnvelopeAlgebra {
  int r = 0;
  std::vector<std::string> labels;
  /// Free index of each independent Y (position in the j<k pair list).
  std::vector<int> independent_y;
  /// For every pair (j<k) in lexicographic order: its coordinates in the
  /// reduced basis.
  std::vector<EnvelopeVector> expand;
  /// brackets[a * dim + b] = [basis_a, basis_b].
  std::vector<EnvelopeVector> brackets;
  /// Rank of the cyclic relation system on the free Y span.
  int relation_rank = 0;
  /// Whether the free bracket maps the relation span into itself, i.e. the
  /// quotient bracket is well defined. Checked, not assumed.
  bool quotient_consistent = true;
  std::string consistency_detail;

  [[nodiscard]] int dim() const { return static_cast<int>(labels.size()); }
  [[nodiscard]] int free_dim() const { return 2 * r + r * (r - 1) / 2; }
  [[nodiscard]] const EnvelopeVector& bracket(int a, int b) const { return brackets[a * dim() + b]; }
  EnvelopeVector& bracket(int a, int b) { return brackets[a * dim() + b]; }
  /// Bilinear extension of the bracket table.
  [[nodiscard]] EnvelopeVector bracket(const EnvelopeVector& x, const EnvelopeVector& y) const;
  /// Position of Y_jk (j < k) in the lexicographic pair list.
  [[nodiscard]] int pair_index(int j, int k) const;
};

/// Builds the quotient bracket table. Throws PreconditionError if c fails
/// is_maltsev, and std::logic_error if the eliminated relations do not
/// reduce to zero (an internal inconsistency).
EnvelopeAlgebra build_envelope(const StructureTensor& c);

/// Antisymmetry of the table plus the Jacobi identity on all basis triples.
/// Witness: {a, b} for antisymmetry, {a, b, c} for Jacobi.
CheckReport check_jacobi(const EnvelopeAlgebra& env);

/// Dimension of the smallest commutator-closed matrix space containing all
/// S_j and T_j.
int matrix_closure_dim(const GeneratorSet& gen);

/// Whether S_j ↦ S_j, T_j ↦ T_j, Y_jk ↦ yamagutian(gen, c)_jk sends every
/// bracket of the table to the matrix commutator. Witness: {a, b}.
CheckReport realize_check(const EnvelopeAlgebra& env, const GeneratorSet& gen, const StructureTensor& c);

}  // namespace mnl
