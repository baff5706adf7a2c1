#include <gtest/gtest.h>

#include <cmath>

#include "mnl/errors.hpp"
#include "mnl/loops.hpp"

using namespace mnl;

TEST(Quasigroup, GroupsAndBuiltinsPass) {
  EXPECT_TRUE(is_quasigroup(symmetric_group_s3()).passed);
  EXPECT_TRUE(is_quasigroup(octonion_unit_loop()).passed);
  EXPECT_TRUE(is_quasigroup(chein_double(symmetric_group_s3())).passed);
}

TEST(Quasigroup, RepeatedEntryInRowOne) {
  auto table = cyclic_group(4).table();
  table[1 * 4 + 2] = table[1 * 4 + 1];  // row 1 now repeats an element
  const auto report = is_quasigroup(CayleyTable(4, table));
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness, std::vector<int>{1});
  EXPECT_NE(report.detail.find("row 1"), std::string::npos);
}

TEST(CayleyTable, MalformedInputRejected) {
  EXPECT_THROW(CayleyTable(2, {0, 1, 1}), InputError);
  EXPECT_THROW(CayleyTable(2, {0, 1, 1, 2}), InputError);
  EXPECT_THROW(CayleyTable(2, {0, 1, 1, 0}, {"e"}), InputError);
}

TEST(Moufang, AllSmallGroupsPass) {
  const auto groups = small_groups();
  EXPECT_EQ(groups.size(), 14u);
  for (const auto& g : groups) {
    EXPECT_TRUE(is_moufang(g.table).passed) << g.name;
    EXPECT_TRUE(is_associative(g.table).passed) << g.name;
  }
}

TEST(Moufang, NonassociativeLoops) {
  for (const auto& t : {octonion_unit_loop(), chein_double(symmetric_group_s3())}) {
    EXPECT_TRUE(is_moufang(t).passed);
    EXPECT_FALSE(is_associative(t).passed);
  }
}

TEST(Moufang, PreconditionViolationThrows) {
  auto table = cyclic_group(3).table();
  std::swap(table[0], table[1]);  // breaks unit and Latin property
  EXPECT_THROW(is_moufang(CayleyTable(3, table)), PreconditionError);
}

TEST(Moufang, NonMoufangQuasigroupWithUnitFails) {
  // The smallest non-Moufang loop with a unit: order 5 Latin square.
  const CayleyTable t(5, {0, 1, 2, 3, 4,  //
                          1, 0, 3, 4, 2,  //
                          2, 4, 0, 1, 3,  //
                          3, 2, 4, 0, 1,  //
                          4, 3, 1, 2, 0});
  ASSERT_TRUE(is_quasigroup(t).passed);
  ASSERT_TRUE(has_unit(t).passed);
  const auto report = is_moufang(t);
  EXPECT_FALSE(report.passed);
  EXPECT_FALSE(report.witness.empty());
}

TEST(Associative, OctonionWitnessIsE1E2E4) {
  const auto loop = octonion_unit_loop();
  const auto report = is_associative(loop);
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness, (std::vector<int>{loop.find("e1"), loop.find("e2"), loop.find("e4")}));
  // (e1 e2) e4 = −e1 (e2 e4)
  const int lhs = loop.mul(loop.mul(loop.find("e1"), loop.find("e2")), loop.find("e4"));
  const int rhs = loop.mul(loop.find("e1"), loop.mul(loop.find("e2"), loop.find("e4")));
  EXPECT_EQ(loop.name(lhs), "e7");
  EXPECT_EQ(loop.name(rhs), "-e7");
}

TEST(Chein, AbelianDoublesAreAssociative) {
  const auto z2 = chein_double(cyclic_group(2));
  EXPECT_EQ(z2.order(), 4);
  EXPECT_TRUE(is_associative(z2).passed);
  const auto z3 = chein_double(cyclic_group(3));
  EXPECT_EQ(z3.order(), 6);
  EXPECT_TRUE(is_associative(z3).passed);
  EXPECT_TRUE(is_moufang(z3).passed);
}

TEST(Chein, S3DoubleIsOrderTwelveMoufang) {
  const auto t = chein_double(symmetric_group_s3());
  EXPECT_EQ(t.order(), 12);
  EXPECT_TRUE(is_moufang(t).passed);
  EXPECT_FALSE(is_associative(t).passed);
}

TEST(Chein, RejectsNonGroup) { EXPECT_THROW(chein_double(octonion_unit_loop()), InputError); }

TEST(Chein, EveryDoubleOfSmallGroupIsMoufangLoop) {
  for (const auto& g : small_groups()) {
    const auto d = chein_double(g.table);
    EXPECT_TRUE(is_quasigroup(d).passed) << g.name;
    EXPECT_TRUE(has_unit(d).passed) << g.name;
    EXPECT_TRUE(is_moufang(d).passed) << g.name;
  }
}

TEST(OctonionLoop, Products) {
  const auto loop = octonion_unit_loop();
  EXPECT_EQ(loop.order(), 16);
  EXPECT_EQ(loop.name(loop.mul(loop.find("e1"), loop.find("e2"))), "e3");
  EXPECT_EQ(loop.name(loop.mul(loop.find("e1"), loop.find("e1"))), "-1");
  EXPECT_TRUE(has_unit(loop).passed);
}

TEST(LoopCommutator, GroupCases) {
  for (const auto& g : small_groups()) {
    for (int a = 0; a < g.table.order(); ++a) EXPECT_EQ(loop_commutator(g.table, a, a), 0) << g.name;
  }
  const auto s3 = symmetric_group_s3();
  EXPECT_EQ(s3.name(loop_commutator(s3, s3.find("(12)"), s3.find("(13)"))), "(132)");
}

TEST(LoopCommutator, OctonionUnits) {
  const auto loop = octonion_unit_loop();
  EXPECT_EQ(loop.name(loop_commutator(loop, loop.find("e1"), loop.find("e2"))), "-1");
}

TEST(Chart, UnitAndInverse) {
  const auto chart = unit_octonion_chart();
  const std::vector<double> zero(7, 0.0), v{0.1, -0.2, 0.05, 0.0, 0.3, 0.1, -0.1};
  const auto left = chart.multiply(zero, v);
  const auto right = chart.multiply(v, zero);
  for (int i = 0; i < 7; ++i) {
    EXPECT_DOUBLE_EQ(left[i], v[i]);
    EXPECT_DOUBLE_EQ(right[i], v[i]);
  }
  const auto inv = chart.invert(v);
  for (int i = 0; i < 7; ++i) EXPECT_DOUBLE_EQ(inv[i], -v[i]);
  const auto unit = chart.multiply(v, inv);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(unit[i], 0.0, 1e-15);
}

TEST(Chart, SmallProduct) {
  const auto chart = unit_octonion_chart();
  std::vector<double> v(7, 0.0), w(7, 0.0);
  v[0] = 0.1;
  w[1] = 0.1;
  const auto p = chart.multiply(v, w);
  // (a + 0.1 e1)(a + 0.1 e2) with a = √0.99: e3 component is 0.1·0.1.
  EXPECT_NEAR(p[2], 0.01, 1e-15);
  EXPECT_NEAR(p[0], std::sqrt(0.99) * 0.1, 1e-15);
}

TEST(Chart, DomainErrors) {
  const auto chart = unit_octonion_chart();
  std::vector<double> out(7, 0.0);
  out[0] = 1.0;
  EXPECT_THROW(chart.invert(out), InputError);
  EXPECT_THROW(chart.multiply(std::vector<double>(6, 0.0), std::vector<double>(7, 0.0)), InputError);
  EXPECT_THROW(tangent_structure_constants(chart, 0.2), InputError);
  EXPECT_THROW(tangent_structure_constants(chart, 0.0), InputError);
}

TEST(TangentConstants, OctonionChartMatchesM7) {
  const auto m7 = catalog_algebra("m7");
  const auto est = tangent_structure_constants(unit_octonion_chart(), 1e-3);
  EXPECT_LT(max_abs_diff(est, m7), 1e-5);
  EXPECT_LE(est.raw_asymmetry, 1e-6);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) EXPECT_EQ(est(i, j, k), -est(i, k, j));
    }
  }
}

TEST(TangentConstants, AbelianChartGivesZero) {
  const auto est = tangent_structure_constants(additive_chart(1), 1e-3);
  EXPECT_LT(max_abs_diff(est, StructureTensor(1)), 1e-8);
}

TEST(TangentConstants, SecondOrderConvergence) {
  const auto m7 = catalog_algebra("m7");
  const auto chart = unit_octonion_chart();
  const double coarse = max_abs_diff(tangent_structure_constants(chart, 1e-2), m7);
  const double fine = max_abs_diff(tangent_structure_constants(chart, 1e-3), m7);
  EXPECT_GT(coarse / fine, 80.0);
  EXPECT_LT(coarse / fine, 120.0);
}

TEST(TangentConstants, BracketingRobustness) {
  const auto chart = unit_octonion_chart();
  const auto left = tangent_structure_constants(chart, 1e-3, Bracketing::Left);
  const auto right = tangent_structure_constants(chart, 1e-3, Bracketing::Right);
  EXPECT_LT(max_abs_diff(left, right), 1e-5);
}
