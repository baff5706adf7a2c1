#pragma once

#include <string_view>
#include <vector>

#include "mnl/algebra.hpp"
#include "mnl/loops.hpp"
#include "mnl/qmatrix.hpp"
#include "mnl/report.hpp"

namespace mnl {

/// Pair of matrix-valued maps g ↦ S_g, g ↦ T_g on a finite loop.
struct LoopBirep {
  CayleyTable loop;
  std::vector<QMatrix> S;
  std::vector<QMatrix> T;
};

/// Differential of a birepresentation: S_j, T_j for j = 1..r, each dim × dim.
struct GeneratorSet {
  int r = 0;
  int dim = 0;
  std::vector<QMatrix> S;
  std::vector<QMatrix> T;

  /// Throws InputError if list lengths or matrix sizes disagree with r, dim.
  void validate() const;
  /// All generators multiplied by s; structure constants scale by s too.
  [[nodiscard]] GeneratorSet scaled(const Rational& s) const;
};

/// S_e = T_e = 1, T_g S_g S_h = S_{gh} T_g, S_g T_g T_h = T_{hg} S_g.
/// Witness: {axiom, g, h} with axiom 0 = unit, 1 = first, 2 = second law.
CheckReport check_birep(const LoopBirep& b);

/// S_g S_h = S_{gh}, T_g T_h = T_{hg}, S_g T_h = T_h S_g.
/// Witness: {relation, g, h} with relation 0, 1, 2 in that order.
CheckReport check_associative_birep(const LoopBirep& b);

/// Left and right translations as permutation matrices: S_g e_x = e_{gx},
/// T_g e_x = e_{xg}. Throws PreconditionError unless the table is Moufang.
LoopBirep regular_birep(const CayleyTable& t);

/// Left/right multiplication by e_1..e_7 on the octonions (r = 7, dim = 8).
GeneratorSet octonion_lr_generators();
/// Left/right multiplication by i, j, k on the quaternions (r = 3, dim = 4).
GeneratorSet quaternion_lr_generators();

/// Y_jk = −[S_j,T_k] + ⅓ c^p_jk S_p − ⅓ c^p_jk T_p for all ordered (j, k);
/// entry j·r + k.
std::vector<QMatrix> yamagutian(const GeneratorSet& gen, const StructureTensor& c);

struct GLCReport {
  std::vector<CheckReport> families;

  [[nodiscard]] bool passed() const;
  /// Throws std::out_of_range for an unknown family name.
  [[nodiscard]] const CheckReport& family(std::string_view name) const;
};

/// Checks the generalized Lie–Cartan relations with Y extracted by
/// yamagutian(). Families: "commutation" ([S,S] and [T,T]), "antisymmetry",
/// "cyclic", "reductivity" ([Y,S] and [Y,T]), "yamaguti-lie" ([Y,Y]).
GLCReport check_glc(const GeneratorSet& gen, const StructureTensor& c);

}  // namespace mnl
