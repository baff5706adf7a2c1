#include "mnl/birep.hpp"

#include <stdexcept>
#include <string>

#include "mnl/envelope.hpp"
#include "mnl/errors.hpp"
#include "mnl/octonion.hpp"

namespace mnl {
namespace {

void validate(const LoopBirep& b) {
  const auto n = static_cast<std::size_t>(b.loop.order());
  if (b.S.size() != n || b.T.size() != n) throw InputError("birepresentation must define S and T on every element");
  const std::size_t m = b.S.empty() ? 0 : b.S.front().rows();
  for (std::size_t g = 0; g < n; ++g) {
    for (const QMatrix* x : {&b.S[g], &b.T[g]}) {
      if (!x->square() || x->rows() != m) throw InputError("birepresentation matrices must be square and equal size");
    }
  }
}

std::string pair_text(const CayleyTable& t, int g, int h) { return "g=" + t.name(g) + ", h=" + t.name(h); }

/// Σ_p coeff(p) · mats[p]
template <class Coeff>
QMatrix combine(const std::vector<QMatrix>& mats, int r, Coeff coeff) {
  QMatrix out(mats.front().rows(), mats.front().cols());
  for (int p = 0; p < r; ++p) {
    const Rational w = coeff(p);
    if (!w.is_zero()) out += mats[p] * w;
  }
  return out;
}

QMatrix lr_matrix(int units, int j, bool left) {
  QMatrix m(units, units);
  for (int b = 0; b < units; ++b) {
    const auto p = left ? octonion::basis_product(j, b) : octonion::basis_product(b, j);
    m(p.index, b) = p.sign;
  }
  return m;
}

GeneratorSet lr_generators(int units) {
  GeneratorSet g{units - 1, units, {}, {}};
  for (int j = 1; j < units; ++j) {
    g.S.push_back(lr_matrix(units, j, true));
    g.T.push_back(lr_matrix(units, j, false));
  }
  return g;
}

std::string idx(std::initializer_list<int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
  return s;
}

}  // namespace

void GeneratorSet::validate() const {
  if (r <= 0 || dim <= 0) throw InputError("generator set needs positive r and dim");
  if (S.size() != static_cast<std::size_t>(r) || T.size() != static_cast<std::size_t>(r)) {
    throw InputError("generator set must list r matrices for both S and T");
  }
  for (const auto& list : {&S, &T}) {
    for (const auto& m : *list) {
      if (m.rows() != static_cast<std::size_t>(dim) || m.cols() != static_cast<std::size_t>(dim)) {
        throw InputError("generator matrix is not dim x dim");
      }
    }
  }
}

GeneratorSet GeneratorSet::scaled(const Rational& s) const {
  GeneratorSet out = *this;
  for (auto& m : out.S) m *= s;
  for (auto& m : out.T) m *= s;
  return out;
}

CheckReport check_birep(const LoopBirep& b) {
  validate(b);
  const CayleyTable& t = b.loop;
  const int n = t.order();
  const QMatrix one = QMatrix::identity(b.S.front().rows());
  if (b.S[0] != one || b.T[0] != one) return CheckReport::fail("birep", {0, 0, 0}, "S_e or T_e is not the identity");
  for (int g = 0; g < n; ++g) {
    const QMatrix ts = b.T[g] * b.S[g];
    const QMatrix st = b.S[g] * b.T[g];
    for (int h = 0; h < n; ++h) {
      if (ts * b.S[h] != b.S[t.mul(g, h)] * b.T[g]) {
        return CheckReport::fail("birep", {1, g, h}, "T_g S_g S_h != S_gh T_g for " + pair_text(t, g, h));
      }
      if (st * b.T[h] != b.T[t.mul(h, g)] * b.S[g]) {
        return CheckReport::fail("birep", {2, g, h}, "S_g T_g T_h != T_hg S_g for " + pair_text(t, g, h));
      }
    }
  }
  return CheckReport::pass("birep");
}

CheckReport check_associative_birep(const LoopBirep& b) {
  validate(b);
  const CayleyTable& t = b.loop;
  const int n = t.order();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (b.S[g] * b.S[h] != b.S[t.mul(g, h)]) {
        return CheckReport::fail("associative-birep", {0, g, h}, "S_g S_h != S_gh for " + pair_text(t, g, h));
      }
      if (b.T[g] * b.T[h] != b.T[t.mul(h, g)]) {
        return CheckReport::fail("associative-birep", {1, g, h}, "T_g T_h != T_hg for " + pair_text(t, g, h));
      }
      if (b.S[g] * b.T[h] != b.T[h] * b.S[g]) {
        return CheckReport::fail("associative-birep", {2, g, h}, "S_g T_h != T_h S_g for " + pair_text(t, g, h));
      }
    }
  }
  return CheckReport::pass("associative-birep");
}

LoopBirep regular_birep(const CayleyTable& t) {
  bool moufang = false;
  try {
    moufang = is_moufang(t).passed;
  } catch (const PreconditionError&) {
    moufang = false;
  }
  if (!moufang) throw PreconditionError("regular_birep requires a Moufang loop");
  const int n = t.order();
  LoopBirep b{t, {}, {}};
  for (int g = 0; g < n; ++g) {
    QMatrix s(n, n), tr(n, n);
    for (int x = 0; x < n; ++x) {
      s(t.mul(g, x), x) = 1;
      tr(t.mul(x, g), x) = 1;
    }
    b.S.push_back(std::move(s));
    b.T.push_back(std::move(tr));
  }
  return b;
}

GeneratorSet octonion_lr_generators() { return lr_generators(8); }
GeneratorSet quaternion_lr_generators() { return lr_generators(4); }

std::vector<QMatrix> yamagutian(const GeneratorSet& gen, const StructureTensor& c) {
  gen.validate();
  if (gen.r != c.dim()) throw InputError("generator count r does not match tensor dimension");
  const int r = gen.r;
  const Rational third(1, 3);
  std::vector<QMatrix> y;
  y.reserve(static_cast<std::size_t>(r) * r);
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      QMatrix m = combine(gen.S, r, [&](int p) { return third * c(p, j, k); }) -
                  combine(gen.T, r, [&](int p) { return third * c(p, j, k); }) - commutator(gen.S[j], gen.T[k]);
      y.push_back(std::move(m));
    }
  }
  return y;
}

bool GLCReport::passed() const {
  for (const auto& f : families) {
    if (!f.passed) return false;
  }
  return true;
}

const CheckReport& GLCReport::family(std::string_view name) const {
  for (const auto& f : families) {
    if (f.property == name) return f;
  }
  throw std::out_of_range("no GLC family '" + std::string(name) + "'");
}

GLCReport check_glc(const GeneratorSet& gen, const StructureTensor& c) {
  const std::vector<QMatrix> Y = yamagutian(gen, c);
  const YamagutiTensor d = yamaguti_constants(c);
  const int r = gen.r;
  auto y = [&](int j, int k) -> const QMatrix& { return Y[static_cast<std::size_t>(j) * r + k]; };
  const Rational third(1, 3), two_thirds(2, 3);
  GLCReport report;

  report.families.push_back([&] {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        const QMatrix cs = combine(gen.S, r, [&](int p) { return c(p, j, k); });
        const QMatrix ct = combine(gen.T, r, [&](int p) { return c(p, j, k); });
        if (commutator(gen.S[j], gen.S[k]) != y(j, k) * Rational(2) + cs * third + ct * two_thirds) {
          return CheckReport::fail("commutation", {0, j, k}, "[S_j,S_k] relation fails at j,k=" + idx({j, k}));
        }
        if (commutator(gen.T[j], gen.T[k]) != y(j, k) * Rational(2) - cs * two_thirds - ct * third) {
          return CheckReport::fail("commutation", {1, j, k}, "[T_j,T_k] relation fails at j,k=" + idx({j, k}));
        }
      }
    }
    return CheckReport::pass("commutation");
  }());

  report.families.push_back([&] {
    for (int j = 0; j < r; ++j) {
      for (int k = j; k < r; ++k) {
        if (!(y(j, k) + y(k, j)).is_zero()) {
          return CheckReport::fail("antisymmetry", {j, k}, "Y_jk + Y_kj != 0 at j,k=" + idx({j, k}));
        }
      }
    }
    return CheckReport::pass("antisymmetry");
  }());

  report.families.push_back([&] {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          QMatrix sum(gen.dim, gen.dim);
          for (int p = 0; p < r; ++p) {
            if (!c(p, j, k).is_zero()) sum += y(p, l) * c(p, j, k);
            if (!c(p, k, l).is_zero()) sum += y(p, j) * c(p, k, l);
            if (!c(p, l, j).is_zero()) sum += y(p, k) * c(p, l, j);
          }
          if (!sum.is_zero()) {
            return CheckReport::fail("cyclic", {j, k, l}, "cyclic Yamaguti relation fails at j,k,l=" + idx({j, k, l}));
          }
        }
      }
    }
    return CheckReport::pass("cyclic");
  }());

  report.families.push_back([&] {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int n = 0; n < r; ++n) {
          if (commutator(y(j, k), gen.S[n]) != combine(gen.S, r, [&](int p) { return d(p, j, k, n); })) {
            return CheckReport::fail("reductivity", {0, j, k, n}, "[Y_jk,S_n] relation fails at j,k,n=" + idx({j, k, n}));
          }
          if (commutator(y(j, k), gen.T[n]) != combine(gen.T, r, [&](int p) { return d(p, j, k, n); })) {
            return CheckReport::fail("reductivity", {1, j, k, n}, "[Y_jk,T_n] relation fails at j,k,n=" + idx({j, k, n}));
          }
        }
      }
    }
    return CheckReport::pass("reductivity");
  }());

  report.families.push_back([&] {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          for (int n = 0; n < r; ++n) {
            QMatrix rhs(gen.dim, gen.dim);
            for (int p = 0; p < r; ++p) {
              if (!d(p, j, k, l).is_zero()) rhs += y(p, n) * d(p, j, k, l);
              if (!d(p, j, k, n).is_zero()) rhs += y(l, p) * d(p, j, k, n);
            }
            if (commutator(y(j, k), y(l, n)) != rhs) {
              return CheckReport::fail("yamaguti-lie", {j, k, l, n},
                                       "[Y_jk,Y_ln] relation fails at j,k,l,n=" + idx({j, k, l, n}));
            }
          }
        }
      }
    }
    return CheckReport::pass("yamaguti-lie");
  }());

  return report;
}

}  // namespace mnl
