#include <gtest/gtest.h>

#include "mnl/envelope.hpp"
#include "mnl/errors.hpp"

using namespace mnl;

namespace {

// Direct evaluation of 6 d^p_jkl = c^p_js c^s_kl − c^p_ks c^s_jl + c^p_sl c^s_jk.
Rational brute_d(const StructureTensor& c, int p, int j, int k, int l) {
  Rational six;
  for (int s = 0; s < c.dim(); ++s) {
    six += c(p, j, s) * c(s, k, l) - c(p, k, s) * c(s, j, l) + c(p, s, l) * c(s, j, k);
  }
  return six / Rational(6);
}

}  // namespace

TEST(Yamaguti, AbelianIsZero) {
  const auto d = yamaguti_constants(catalog_algebra("abelian(3)"));
  for (int p = 0; p < 3; ++p)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) EXPECT_TRUE(d(p, j, k, l).is_zero());
}

TEST(Yamaguti, Su2ClosedForm) {
  const auto d = yamaguti_constants(catalog_algebra("su2"));
  EXPECT_EQ(d(1, 0, 1, 0), Rational(1, 3));  // d^2_{1,2,1}
  // d^p_jkl = ⅓(δ_lj δ_pk − δ_lk δ_pj) for c = ε
  for (int p = 0; p < 3; ++p)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const int v = (l == j && p == k ? 1 : 0) - (l == k && p == j ? 1 : 0);
          EXPECT_EQ(d(p, j, k, l), Rational(v, 3));
        }
}

TEST(Yamaguti, M7MatchesContractionOracle) {
  const auto c = catalog_algebra("m7");
  const auto d = yamaguti_constants(c);
  for (int p = 0; p < 7; ++p)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) {
          EXPECT_EQ(d(p, j, k, l), brute_d(c, p, j, k, l));
          EXPECT_EQ(3 % d(p, j, k, l).den(), 0);
          EXPECT_EQ(d(p, j, k, l), -d(p, k, j, l));
        }
  // frozen spot values (1-based d^1_{1,2,2} = −4/3, d^4_{1,2,7} = 2/3)
  EXPECT_EQ(d(0, 0, 1, 1), Rational(-4, 3));
  EXPECT_EQ(d(3, 0, 1, 6), Rational(2, 3));
}

TEST(Yamaguti, LieAlgebrasSatisfyJacobiForm) {
  for (const char* name : {"su2", "sl2"}) {
    const auto c = catalog_algebra(name);
    const auto d = yamaguti_constants(c);
    for (int p = 0; p < 3; ++p)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            Rational rhs;
            for (int s = 0; s < 3; ++s) rhs += Rational(2) * c(p, s, l) * c(s, j, k);
            EXPECT_EQ(Rational(6) * d(p, j, k, l), rhs) << name;
          }
  }
}

TEST(Envelope, Su2HasDimensionNine) {
  const auto env = build_envelope(catalog_algebra("su2"));
  EXPECT_EQ(env.dim(), 9);
  EXPECT_EQ(env.relation_rank, 0);
  EXPECT_TRUE(env.quotient_consistent);
  EXPECT_TRUE(check_jacobi(env).passed);
  EXPECT_EQ(env.labels.back(), "Y2_3");
}

TEST(Envelope, AbelianIsTwoStepNilpotent) {
  // c = 0 kills every structure-constant term and d, so the Y's are central
  // and [S,S], [S,T], [T,T] are pure multiples of Y: 2Y_jk, −Y_jk, 2Y_jk.
  const int r = 4;
  const auto env = build_envelope(catalog_algebra("abelian(4)"));
  EXPECT_EQ(env.dim(), 2 * r + 6);
  EXPECT_EQ(env.relation_rank, 0);
  for (int a = 0; a < env.dim(); ++a) {
    for (int b = 0; b < env.dim(); ++b) {
      const auto& v = env.bracket(a, b);
      for (int i = 0; i < 2 * r; ++i) EXPECT_TRUE(v[i].is_zero());
      if (a >= 2 * r || b >= 2 * r) EXPECT_EQ(v, EnvelopeVector(env.dim()));
    }
  }
  const int y12 = 2 * r + env.pair_index(0, 1);
  EXPECT_EQ(env.bracket(0, 1)[y12], Rational(2));          // [S1,S2]
  EXPECT_EQ(env.bracket(0, r + 1)[y12], Rational(-1));     // [S1,T2]
  EXPECT_EQ(env.bracket(r, r + 1)[y12], Rational(2));      // [T1,T2]
  EXPECT_TRUE(check_jacobi(env).passed);
}

TEST(Envelope, M7MatchesClosureOracle) {
  const auto env = build_envelope(catalog_algebra("m7"));
  EXPECT_LE(env.dim(), env.free_dim());
  EXPECT_EQ(env.free_dim(), 35);
  EXPECT_EQ(env.relation_rank, 7);
  EXPECT_TRUE(env.quotient_consistent);
  EXPECT_EQ(env.dim(), matrix_closure_dim(octonion_lr_generators()));
  EXPECT_EQ(env.dim(), 28);
  EXPECT_TRUE(check_jacobi(env).passed);
}

TEST(Envelope, ExpandIsConsistentWithCyclicRelations) {
  const auto c = catalog_algebra("m7");
  const auto env = build_envelope(c);
  const int r = 7;
  auto y = [&](int j, int k) {
    EnvelopeVector v(env.dim());
    if (j == k) return v;
    const bool flip = j > k;
    v = env.expand[env.pair_index(std::min(j, k), std::max(j, k))];
    if (flip)
      for (auto& q : v) q = -q;
    return v;
  };
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) {
        EnvelopeVector sum(env.dim());
        for (int p = 0; p < r; ++p) {
          const auto a = y(p, l), b = y(p, j), d = y(p, k);
          for (int i = 0; i < env.dim(); ++i) sum[i] += c(p, j, k) * a[i] + c(p, k, l) * b[i] + c(p, l, j) * d[i];
        }
        EXPECT_EQ(sum, EnvelopeVector(env.dim()));
      }
}

TEST(Envelope, NonMaltsevInputRejected) {
  const auto mutant = catalog_algebra("m7").with_entry(2, 0, 1, 0);
  EXPECT_THROW(build_envelope(mutant), PreconditionError);
}

TEST(Envelope, PerturbedBracketFailsJacobi) {
  auto env = build_envelope(catalog_algebra("su2"));
  // [S1, S2] += S3, antisymmetrically
  env.bracket(0, 1)[2] += 1;
  env.bracket(1, 0)[2] -= 1;
  EXPECT_FALSE(check_jacobi(env).passed);
  auto env2 = build_envelope(catalog_algebra("su2"));
  env2.bracket(0, 1)[2] += 1;
  const auto report = check_jacobi(env2);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.witness, (std::vector<int>{0, 1}));
}

TEST(Closure, Dimensions) {
  EXPECT_EQ(matrix_closure_dim(quaternion_lr_generators()), 6);
  EXPECT_EQ(matrix_closure_dim(octonion_lr_generators()), 28);
  GeneratorSet zero{2, 3, {QMatrix(3, 3), QMatrix(3, 3)}, {QMatrix(3, 3), QMatrix(3, 3)}};
  EXPECT_EQ(matrix_closure_dim(zero), 0);
}

TEST(Realize, OctonionGeneratorsRealizeM7Envelope) {
  const auto c = catalog_algebra("m7");
  const auto env = build_envelope(c);
  const auto gen = octonion_lr_generators();
  EXPECT_TRUE(realize_check(env, gen, c).passed);
  EXPECT_LE(matrix_closure_dim(gen), env.dim());
}

TEST(Realize, QuaternionGeneratorsRealizeSu2AfterRescaling) {
  // Quaternion L/R close with c = 2ε; halving every generator rescales the
  // structure constants to ε, the su2 catalog tensor.
  const auto c = catalog_algebra("su2");
  const auto env = build_envelope(c);
  const auto gen = quaternion_lr_generators().scaled(Rational(1, 2));
  EXPECT_TRUE(realize_check(env, gen, c).passed);
  EXPECT_FALSE(realize_check(env, quaternion_lr_generators(), c).passed);
  EXPECT_LE(matrix_closure_dim(gen), env.dim());
}

TEST(Realize, MutatedGeneratorsFail) {
  const auto c = catalog_algebra("m7");
  const auto env = build_envelope(c);
  auto gen = octonion_lr_generators();
  std::swap(gen.T[2], gen.T[3]);
  EXPECT_FALSE(realize_check(env, gen, c).passed);
  EXPECT_THROW(realize_check(env, quaternion_lr_generators(), catalog_algebra("su2")), InputError);
}
