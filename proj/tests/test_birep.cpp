#include <gtest/gtest.h>

#include "mnl/birep.hpp"
#include "mnl/errors.hpp"

using namespace mnl;

namespace {

QVector unit_vector(int n, int a) {
  QVector v(n);
  v[a] = 1;
  return v;
}

StructureTensor quaternion_constants() { return catalog_algebra("su2").scaled(2); }

}  // namespace

TEST(RegularBirep, S3AndOctonionPass) {
  EXPECT_TRUE(check_birep(regular_birep(symmetric_group_s3())).passed);
  EXPECT_TRUE(check_birep(regular_birep(octonion_unit_loop())).passed);
}

TEST(RegularBirep, UnitMapsToIdentity) {
  for (const auto& t : {symmetric_group_s3(), octonion_unit_loop(), chein_double(cyclic_group(3))}) {
    const auto b = regular_birep(t);
    EXPECT_EQ(b.S[0], QMatrix::identity(t.order()));
    EXPECT_EQ(b.T[0], QMatrix::identity(t.order()));
  }
}

TEST(RegularBirep, S3LeftTranslationMatrix) {
  const auto s3 = symmetric_group_s3();
  const int g = s3.find("(12)");
  const auto b = regular_birep(s3);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) EXPECT_EQ(b.S[g](y, x), Rational(y == s3.mul(g, x) ? 1 : 0));
  }
}

TEST(RegularBirep, OctonionRightTranslationColumn) {
  const auto loop = octonion_unit_loop();
  const auto b = regular_birep(loop);
  const int e1 = loop.find("e1"), e2 = loop.find("e2");
  const QVector col = b.T[e1].apply(unit_vector(16, e2));
  EXPECT_EQ(col, unit_vector(16, loop.find("-e3")));  // e2·e1 = −e3
}

TEST(RegularBirep, RejectsNonMoufang) {
  const CayleyTable t(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0});
  EXPECT_THROW(regular_birep(t), PreconditionError);
}

TEST(CheckBirep, BrokenGeneratorFails) {
  const auto loop = octonion_unit_loop();
  auto b = regular_birep(loop);
  b.S[loop.find("e1")] = QMatrix::identity(16);
  const auto report = check_birep(b);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.witness.size(), 3u);
}

TEST(CheckBirep, SizeMismatchIsInputError) {
  auto b = regular_birep(cyclic_group(3));
  b.T[1] = QMatrix::identity(4);
  EXPECT_THROW(check_birep(b), InputError);
  b.T.pop_back();
  EXPECT_THROW(check_birep(b), InputError);
}

TEST(CheckBirep, AllMoufangLoopsGiveBireps) {
  std::vector<CayleyTable> loops{octonion_unit_loop()};
  for (const auto& g : small_groups()) {
    loops.push_back(g.table);
    if (g.table.order() <= 6) loops.push_back(chein_double(g.table));
  }
  for (const auto& t : loops) {
    const auto b = regular_birep(t);
    const bool assoc = check_associative_birep(b).passed;
    EXPECT_TRUE(check_birep(b).passed) << t.order();
    // associative birep ⇒ birep; regular birep is associative iff the loop is
    EXPECT_EQ(assoc, is_associative(t).passed);
  }
}

TEST(AssociativeBirep, Profiles) {
  EXPECT_TRUE(check_associative_birep(regular_birep(cyclic_group(4))).passed);
  const auto oct = check_associative_birep(regular_birep(octonion_unit_loop()));
  EXPECT_FALSE(oct.passed);
  EXPECT_EQ(oct.witness.size(), 3u);
  EXPECT_FALSE(check_associative_birep(regular_birep(chein_double(symmetric_group_s3()))).passed);
}

TEST(Generators, OctonionLeftRightAction) {
  const auto g = octonion_lr_generators();
  EXPECT_EQ(g.r, 7);
  EXPECT_EQ(g.dim, 8);
  EXPECT_EQ(g.S[0].apply(unit_vector(8, 0)), unit_vector(8, 1));       // e1·1 = e1
  QVector minus_one(8);
  minus_one[0] = -1;
  EXPECT_EQ(g.S[0].apply(unit_vector(8, 1)), minus_one);               // e1·e1 = −1
  EXPECT_EQ(g.T[1].apply(unit_vector(8, 1)), unit_vector(8, 3));       // e1·e2 = e3
}

TEST(Generators, ValidateRejectsBadShapes) {
  auto g = quaternion_lr_generators();
  g.S.pop_back();
  EXPECT_THROW(g.validate(), InputError);
  EXPECT_THROW(check_glc(quaternion_lr_generators(), catalog_algebra("m7")), InputError);
}

TEST(CheckGLC, OctonionGeneratorsPassAllFamilies) {
  const auto report = check_glc(octonion_lr_generators(), catalog_algebra("m7"));
  ASSERT_EQ(report.families.size(), 5u);
  for (const auto& f : report.families) EXPECT_TRUE(f.passed) << f.property << ": " << f.detail;
}

TEST(CheckGLC, QuaternionYamagutianIsAssociativeReduction) {
  const auto gen = quaternion_lr_generators();
  const auto c = quaternion_constants();
  EXPECT_TRUE(check_glc(gen, c).passed());
  const auto Y = yamagutian(gen, c);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_TRUE(commutator(gen.S[j], gen.T[k]).is_zero());
      QMatrix expected(4, 4), ss(4, 4);
      for (int p = 0; p < 3; ++p) {
        expected += (gen.S[p] - gen.T[p]) * (Rational(1, 3) * c(p, j, k));
        ss += gen.S[p] * c(p, j, k);
      }
      EXPECT_EQ(Y[j * 3 + k], expected);
      EXPECT_EQ(commutator(gen.S[j], gen.S[k]), ss);
    }
  }
}

TEST(CheckGLC, SwappedGeneratorsFailWithNamedRelation) {
  auto gen = octonion_lr_generators();
  std::swap(gen.S[0], gen.S[1]);
  const auto report = check_glc(gen, catalog_algebra("m7"));
  EXPECT_FALSE(report.passed());
  const auto& comm = report.family("commutation");
  EXPECT_FALSE(comm.passed);
  EXPECT_FALSE(comm.witness.empty());
  EXPECT_NE(comm.detail.find("relation fails"), std::string::npos);
}
