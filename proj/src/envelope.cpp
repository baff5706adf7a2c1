#include "mnl/envelope.hpp"

#include <stdexcept>
#include <utility>

#include "mnl/errors.hpp"

namespace mnl {
namespace {

bool all_zero(const QVector& v) {
  for (const auto& q : v) {
    if (!q.is_zero()) return false;
  }
  return true;
}

void axpy(QVector& y, const Rational& a, const QVector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

QVector flatten(const QMatrix& m) {
  const auto f = m.flat();
  return {f.begin(), f.end()};
}

// Free span of S_1..S_r, T_1..T_r, Y_jk (j<k) before the cyclic relations
// are imposed. Index layout: S_j → j, T_j → r + j, Y_jk → 2r + pair(j,k).
class FreeEnvelope {
 public:
  FreeEnvelope(const StructureTensor& c, const YamagutiTensor& d) : c_(c), d_(d), r_(c.dim()) {}

  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] int pairs() const { return r_ * (r_ - 1) / 2; }
  [[nodiscard]] int size() const { return 2 * r_ + pairs(); }

  [[nodiscard]] int pair(int j, int k) const { return j * r_ - j * (j + 1) / 2 + (k - j - 1); }

  /// Y_jk as a free vector: +Y_jk for j<k, −Y_kj for j>k, 0 for j=k.
  void add_y(QVector& v, int j, int k, const Rational& w) const {
    if (j == k || w.is_zero()) return;
    if (j < k) {
      v[2 * r_ + pair(j, k)] += w;
    } else {
      v[2 * r_ + pair(k, j)] -= w;
    }
  }

  [[nodiscard]] std::pair<int, int> pair_of(int q) const {
    for (int j = 0; j < r_; ++j) {
      for (int k = j + 1; k < r_; ++k) {
        if (pair(j, k) == q) return {j, k};
      }
    }
    throw std::logic_error("bad pair index");
  }

  /// [X_a, X_b] for free generators a, b, read off the Lie–Cartan table.
  [[nodiscard]] QVector bracket(int a, int b) const {
    QVector v(size());
    const int ka = kind(a), kb = kind(b);
    if (ka == kY && kb != kY) {
      const auto [j, k] = pair_of(a - 2 * r_);
      const int n = b % r_;
      const int offset = kb == kS ? 0 : r_;
      for (int p = 0; p < r_; ++p) v[offset + p] += d_(p, j, k, n);
      return v;
    }
    if (kb == kY && ka != kY) {
      QVector w = bracket(b, a);
      for (auto& q : w) q = -q;
      return w;
    }
    if (ka == kY && kb == kY) {
      const auto [j, k] = pair_of(a - 2 * r_);
      const auto [l, n] = pair_of(b - 2 * r_);
      for (int p = 0; p < r_; ++p) {
        add_y(v, p, n, d_(p, j, k, l));
        add_y(v, l, p, d_(p, j, k, n));
      }
      return v;
    }
    if (ka == kT && kb == kS) {
      QVector w = bracket(b, a);
      for (auto& q : w) q = -q;
      return w;
    }
    const int j = a % r_, k = b % r_;
    Rational y, s, t;
    if (ka == kS && kb == kS) {
      y = 2, s = Rational(1, 3), t = Rational(2, 3);
    } else if (ka == kS) {
      y = -1, s = Rational(1, 3), t = Rational(-1, 3);
    } else {
      y = 2, s = Rational(-2, 3), t = Rational(-1, 3);
    }
    add_y(v, j, k, y);
    for (int p = 0; p < r_; ++p) {
      const Rational& cp = c_(p, j, k);
      if (cp.is_zero()) continue;
      v[p] += s * cp;
      v[r_ + p] += t * cp;
    }
    return v;
  }

 private:
  static constexpr int kS = 0, kT = 1, kY = 2;
  [[nodiscard]] int kind(int a) const { return a < r_ ? kS : (a < 2 * r_ ? kT : kY); }

  const StructureTensor& c_;
  const YamagutiTensor& d_;
  int r_;
};

std::string label(int j) { return std::to_string(j + 1); }

}  // namespace

YamagutiTensor::YamagutiTensor(int dim) : dim_(dim) {
  d_.assign(static_cast<std::size_t>(dim) * dim * dim * dim, Rational(0));
}

YamagutiTensor yamaguti_constants(const StructureTensor& c) {
  const int r = c.dim();
  YamagutiTensor d(r);
  const Rational sixth(1, 6);
  for (int p = 0; p < r; ++p) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          Rational sum;
          for (int s = 0; s < r; ++s) {
            const Rational& a = c(p, j, s);
            const Rational& b = c(p, k, s);
            const Rational& e = c(p, s, l);
            if (!a.is_zero() && !c(s, k, l).is_zero()) sum += a * c(s, k, l);
            if (!b.is_zero() && !c(s, j, l).is_zero()) sum -= b * c(s, j, l);
            if (!e.is_zero() && !c(s, j, k).is_zero()) sum += e * c(s, j, k);
          }
          d(p, j, k, l) = sum * sixth;
        }
      }
    }
  }
  return d;
}

EnvelopeVector EnvelopeAlgebra::bracket(const EnvelopeVector& x, const EnvelopeVector& y) const {
  const int n = dim();
  EnvelopeVector out(n);
  for (int a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (y[b].is_zero()) continue;
      axpy(out, x[a] * y[b], bracket(a, b));
    }
  }
  return out;
}

int EnvelopeAlgebra::pair_index(int j, int k) const {
  if (j < 0 || k >= r || j >= k) throw InputError("pair index requires 0 <= j < k < r");
  return j * r - j * (j + 1) / 2 + (k - j - 1);
}

EnvelopeAlgebra build_envelope(const StructureTensor& c) {
  if (!is_maltsev(c)) throw PreconditionError("build_envelope requires a Mal'tsev structure tensor");
  const YamagutiTensor d = yamaguti_constants(c);
  const FreeEnvelope free(c, d);
  const int r = c.dim(), P = free.pairs(), F = free.size();

  // Cyclic relations c^p_jk Y_pl + c^p_kl Y_pj + c^p_lj Y_pk = 0 on the Y span.
  std::vector<QVector> relations;
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        QVector v(F);
        for (int p = 0; p < r; ++p) {
          free.add_y(v, p, l, c(p, j, k));
          free.add_y(v, p, j, c(p, k, l));
          free.add_y(v, p, k, c(p, l, j));
        }
        QVector y(v.begin() + 2 * r, v.end());
        if (!all_zero(y)) relations.push_back(std::move(y));
      }
    }
  }
  std::vector<QVector> rows = relations;
  const std::vector<std::size_t> pivots = rref(rows, P);

  EnvelopeAlgebra env;
  env.r = r;
  env.relation_rank = static_cast<int>(pivots.size());
  for (int j = 0; j < r; ++j) env.labels.push_back("S" + label(j));
  for (int j = 0; j < r; ++j) env.labels.push_back("T" + label(j));
  std::vector<int> pivot_row(P, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
  std::vector<int> basis_pos(P, -1);
  for (int q = 0; q < P; ++q) {
    if (pivot_row[q] >= 0) continue;
    basis_pos[q] = static_cast<int>(env.labels.size());
    env.independent_y.push_back(q);
    const auto [j, k] = free.pair_of(q);
    env.labels.push_back("Y" + label(j) + "_" + label(k));
  }
  const int n = env.dim();

  for (int q = 0; q < P; ++q) {
    EnvelopeVector e(n);
    if (pivot_row[q] < 0) {
      e[basis_pos[q]] = 1;
    } else {
      const QVector& row = rows[pivot_row[q]];
      for (int f = 0; f < P; ++f) {
        if (f != q && !row[f].is_zero()) {
          if (basis_pos[f] < 0) throw std::logic_error("relation row references another pivot");
          e[basis_pos[f]] -= row[f];
        }
      }
    }
    env.expand.push_back(std::move(e));
  }

  auto reduce = [&](const QVector& v) {
    EnvelopeVector out(n);
    for (int a = 0; a < 2 * r; ++a) out[a] = v[a];
    for (int q = 0; q < P; ++q) axpy(out, v[2 * r + q], env.expand[q]);
    return out;
  };

  for (const auto& rel : relations) {
    QVector v(F);
    for (int q = 0; q < P; ++q) v[2 * r + q] = rel[q];
    if (!all_zero(reduce(v))) throw std::logic_error("cyclic relation does not vanish after elimination");
  }

  std::vector<int> free_index(n);
  for (int a = 0; a < 2 * r; ++a) free_index[a] = a;
  for (std::size_t i = 0; i < env.independent_y.size(); ++i) free_index[2 * r + i] = 2 * r + env.independent_y[i];
  env.brackets.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) env.brackets.push_back(reduce(free.bracket(free_index[a], free_index[b])));
  }

  // The quotient bracket is well defined iff [relation, X] lies in the
  // relation span for every free generator X.
  for (std::size_t i = 0; i < rows.size() && env.quotient_consistent; ++i) {
    for (int x = 0; x < F; ++x) {
      QVector acc(F);
      for (int q = 0; q < P; ++q) axpy(acc, rows[i][q], free.bracket(2 * r + q, x));
      if (!all_zero(reduce(acc))) {
        env.quotient_consistent = false;
        env.consistency_detail = "bracket of relation " + std::to_string(i) + " with free generator " +
                                 std::to_string(x) + " leaves the relation span";
        break;
      }
    }
  }
  return env;
}

CheckReport check_jacobi(const EnvelopeAlgebra& env) {
  const int n = env.dim();
  if (env.brackets.size() != static_cast<std::size_t>(n) * n) throw InputError("bracket table has wrong size");
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      EnvelopeVector s = env.bracket(a, b);
      for (int i = 0; i < n; ++i) s[i] += env.bracket(b, a)[i];
      if (!all_zero(s)) {
        return CheckReport::fail("jacobi", {a, b}, "bracket table not antisymmetric at [" + env.labels[a] + "," +
                                                       env.labels[b] + "]");
      }
    }
  }
  auto with_basis = [&](int a, const EnvelopeVector& v) {
    EnvelopeVector out(n);
    for (int b = 0; b < n; ++b) axpy(out, v[b], env.bracket(a, b));
    return out;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        EnvelopeVector j = with_basis(a, env.bracket(b, c));
        const EnvelopeVector j2 = with_basis(b, env.bracket(c, a));
        const EnvelopeVector j3 = with_basis(c, env.bracket(a, b));
        for (int i = 0; i < n; ++i) j[i] += j2[i] + j3[i];
        if (!all_zero(j)) {
          return CheckReport::fail("jacobi", {a, b, c}, "Jacobi identity fails on (" + env.labels[a] + "," +
                                                            env.labels[b] + "," + env.labels[c] + ")");
        }
      }
    }
  }
  return CheckReport::pass("jacobi");
}

int matrix_closure_dim(const GeneratorSet& gen) {
  gen.validate();
  const auto n2 = static_cast<std::size_t>(gen.dim) * gen.dim;
  EchelonBasis span(n2);
  std::vector<QMatrix> elems;
  for (const auto& list : {&gen.S, &gen.T}) {
    for (const auto& m : *list) {
      if (span.insert(flatten(m))) elems.push_back(m);
    }
  }
  // Every element gets bracketed with every earlier one exactly once.
  for (std::size_t i = 1; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      QMatrix b = commutator(elems[i], elems[j]);
      if (span.insert(flatten(b))) elems.push_back(std::move(b));
    }
  }
  return static_cast<int>(span.rank());
}

CheckReport realize_check(const EnvelopeAlgebra& env, const GeneratorSet& gen, const StructureTensor& c) {
  if (env.r != gen.r || env.r != c.dim()) throw InputError("envelope, generators and tensor disagree on r");
  const std::vector<QMatrix> Y = yamagutian(gen, c);
  std::vector<QMatrix> image;
  for (const auto& m : gen.S) image.push_back(m);
  for (const auto& m : gen.T) image.push_back(m);
  for (int q : env.independent_y) {
    int j = 0;
    while (env.pair_index(j, env.r - 1) < q) ++j;
    const int k = q - env.pair_index(j, j + 1) + j + 1;
    image.push_back(Y[static_cast<std::size_t>(j) * env.r + k]);
  }
  const int n = env.dim();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      QMatrix rhs(gen.dim, gen.dim);
      const EnvelopeVector& v = env.bracket(a, b);
      for (int e = 0; e < n; ++e) {
        if (!v[e].is_zero()) rhs += image[e] * v[e];
      }
      if (commutator(image[a], image[b]) != rhs) {
        return CheckReport::fail("realize", {a, b}, "matrix commutator of " + env.labels[a] + " and " +
                                                        env.labels[b] + " differs from the bracket table");
      }
    }
  }
  return CheckReport::pass("realize");
}

}  // namespace mnl
