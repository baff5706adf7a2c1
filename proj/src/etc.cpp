#include "mnl/etc.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "mnl/envelope.hpp"
#include "mnl/errors.hpp"

namespace mnl {
namespace {

const GaussRational kI = GaussRational::i();
const GaussRational kMinusI = -GaussRational::i();
const Rational kThird(1, 3);

std::string idx(std::initializer_list<int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
  return s;
}

std::string at(const Position& p) {
  return " (first nonzero at row " + std::to_string(p.row) + ", col " + std::to_string(p.col) + ")";
}

/// Sink for the terms of one relation Σ = 0.
class Relation {
 public:
  Relation& product(const GaussRational& w, const SparseMatrix& a, const SparseMatrix& b) {
    if (!w.is_zero()) terms_.push_back({w, &a, &b});
    return *this;
  }
  Relation& bracket(const GaussRational& w, const SparseMatrix& a, const SparseMatrix& b) {
    return product(w, a, b).product(-w, b, a);
  }
  Relation& linear(const GaussRational& w, const SparseMatrix& a) {
    if (!w.is_zero()) terms_.push_back({w, &a});
    return *this;
  }
  Relation& append(const Relation& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  [[nodiscard]] std::optional<Position> residual(std::size_t n) const { return first_nonzero(terms_, n); }
  [[nodiscard]] SparseMatrix build(std::size_t n) const { return combine(terms_, n); }

 private:
  std::vector<OperatorTerm> terms_;
};

/// Signed view of a stored antisymmetric family, so that j > k needs no copy.
struct PairRef {
  int sign = 0;
  const SparseMatrix* m = nullptr;
};

PairRef pair_ref(const std::vector<SparseMatrix>& stored, std::size_t offset, int r, int j, int k) {
  if (j == k) return {};
  const int lo = std::min(j, k), hi = std::max(j, k);
  const std::size_t p = offset + static_cast<std::size_t>(lo * r - lo * (lo + 1) / 2 + (hi - lo - 1));
  return {j < k ? 1 : -1, &stored[p]};
}

void add_pair(Relation& rel, const GaussRational& w, PairRef y) {
  if (y.m != nullptr) rel.linear(w * GaussRational(y.sign), *y.m);
}

void add_pair_bracket(Relation& rel, const GaussRational& w, PairRef y, const SparseMatrix& b) {
  if (y.m != nullptr) rel.bracket(w * GaussRational(y.sign), *y.m, b);
}

SparseMatrix negate_or_zero(PairRef ref, std::size_t dim) {
  if (ref.m == nullptr) return SparseMatrix(dim);
  return ref.sign > 0 ? *ref.m : ref.m->scaled(GaussRational(-1));
}

void require_fields(const FieldSet& f) {
  const std::size_t modes = static_cast<std::size_t>(f.modes_per_site) * f.sites;
  if (f.u.size() != modes || f.p.size() != modes || f.momentum_factor.is_zero()) {
    throw InputError("malformed field set");
  }
}

// ⅓c^p_jk s_p − ⅓c^p_jk t_p − [s_j, t_k]/κ, the solution of the [s, t]
// relation for Y_jk(x).
Relation extraction(const ChargeDensitySet& d, int j, int k, int x) {
  Relation rel;
  for (int p = 0; p < d.r; ++p) {
    const Rational w = d.c(p, j, k) * kThird;
    rel.linear(w, d.s_at(p, x)).linear(-w, d.t_at(p, x));
  }
  rel.bracket(GaussRational(-1) / d.bracket_factor, d.s_at(j, x), d.t_at(k, x));
  return rel;
}

}  // namespace

FockOps build_fock(int n, int N) {
  if (n < 1 || N < 1) throw InputError("build_fock requires n >= 1 and N >= 1");
  if (n * N > kMaxFockModes) {
    throw InputError("build_fock: n*N = " + std::to_string(n * N) + " exceeds the cap of " +
                     std::to_string(kMaxFockModes) + " modes");
  }
  FockOps f;
  f.modes_per_site = n;
  f.sites = N;
  const int modes = n * N;
  f.dim = std::size_t{1} << modes;
  for (int m = 0; m < modes; ++m) {
    const std::uint32_t bit = 1u << m;
    std::vector<SparseMatrix::Triplet> entries;
    entries.reserve(f.dim / 2);
    for (std::uint32_t b = 0; b < f.dim; ++b) {
      if ((b & bit) == 0) continue;
      const int sign = std::popcount(b & (bit - 1)) % 2 == 0 ? 1 : -1;
      entries.push_back({b ^ bit, b, GaussRational(sign)});
    }
    f.a.push_back(SparseMatrix::from_triplets(f.dim, std::move(entries)));
    f.adag.push_back(f.a.back().transpose());
  }
  return f;
}

CheckReport check_car(const FockOps& f) {
  const SparseMatrix one = SparseMatrix::identity(f.dim);
  const int modes = static_cast<int>(f.a.size());
  for (int m = 0; m < modes; ++m) {
    for (int q = 0; q < modes; ++q) {
      Relation mixed;
      mixed.product(1, f.a[m], f.adag[q]).product(1, f.adag[q], f.a[m]);
      if (m == q) mixed.linear(-1, one);
      if (auto hit = mixed.residual(f.dim)) {
        return CheckReport::fail("car", {0, m, q}, "{a_m, a+_m'} fails at m,m'=" + idx({m, q}) + at(*hit));
      }
      if (q < m) continue;
      Relation aa, cc;
      aa.product(1, f.a[m], f.a[q]).product(1, f.a[q], f.a[m]);
      cc.product(1, f.adag[m], f.adag[q]).product(1, f.adag[q], f.adag[m]);
      if (auto hit = aa.residual(f.dim)) {
        return CheckReport::fail("car", {1, m, q}, "{a_m, a_m'} fails at m,m'=" + idx({m, q}) + at(*hit));
      }
      if (auto hit = cc.residual(f.dim)) {
        return CheckReport::fail("car", {2, m, q}, "{a+_m, a+_m'} fails at m,m'=" + idx({m, q}) + at(*hit));
      }
    }
  }
  return CheckReport::pass("car", std::to_string(modes) + " modes, dimension " + std::to_string(f.dim));
}

FieldSet fields_with_momentum_factor(const FockOps& f, const GaussRational& factor) {
  if (factor.is_zero()) throw InputError("momentum factor must be nonzero");
  FieldSet out;
  out.modes_per_site = f.modes_per_site;
  out.sites = f.sites;
  out.dim = f.dim;
  out.momentum_factor = factor;
  out.u = f.a;
  for (const auto& c : f.adag) out.p.push_back(c.scaled(factor));
  return out;
}

FieldSet canonical_fields(const FockOps& f) { return fields_with_momentum_factor(f, kMinusI); }

CheckReport canonical_etc_check(const FieldSet& f) {
  require_fields(f);
  const SparseMatrix one = SparseMatrix::identity(f.dim);
  const int n = f.modes_per_site;
  for (int x = 0; x < f.sites; ++x) {
    for (int A = 0; A < n; ++A) {
      const std::size_t m = f.mode(A, x);
      for (int y = 0; y < f.sites; ++y) {
        for (int B = 0; B < n; ++B) {
          const std::size_t q = f.mode(B, y);
          const std::string where = " at A,x,B,y=" + idx({A, x, B, y});
          Relation pu;
          pu.product(1, f.p[m], f.u[q]).product(1, f.u[q], f.p[m]);
          if (m == q) pu.linear(kI, one);
          if (auto hit = pu.residual(f.dim)) {
            return CheckReport::fail("canonical", {0, A, x, B, y}, "{p_A(x), u^B(y)} != -i delta" + where + at(*hit));
          }
          if (q < m) continue;
          Relation uu, pp;
          uu.product(1, f.u[m], f.u[q]).product(1, f.u[q], f.u[m]);
          pp.product(1, f.p[m], f.p[q]).product(1, f.p[q], f.p[m]);
          if (auto hit = uu.residual(f.dim)) {
            return CheckReport::fail("canonical", {1, A, x, B, y}, "{u^A(x), u^B(y)} != 0" + where + at(*hit));
          }
          if (auto hit = pp.residual(f.dim)) {
            return CheckReport::fail("canonical", {2, A, x, B, y}, "{p_A(x), p_B(y)} != 0" + where + at(*hit));
          }
        }
      }
    }
  }
  return CheckReport::pass("canonical");
}

SparseMatrix density(const FieldSet& f, const QMatrix& kernel, int x) {
  require_fields(f);
  const int n = f.modes_per_site;
  if (kernel.rows() != static_cast<std::size_t>(n) || kernel.cols() != static_cast<std::size_t>(n)) {
    throw InputError("density kernel must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (x < 0 || x >= f.sites) throw InputError("site out of range");
  Relation rel;
  for (int A = 0; A < n; ++A) {
    for (int B = 0; B < n; ++B) {
      if (!kernel(A, B).is_zero()) rel.product(kernel(A, B), f.p[f.mode(A, x)], f.u[f.mode(B, x)]);
    }
  }
  return rel.build(f.dim);
}

SparseMatrix bilinear(const FieldSet& f, const QMatrix& kernel, int x) {
  return density(f, kernel, x).scaled(GaussRational(1) / f.momentum_factor);
}

SparseMatrix ChargeDensitySet::yamagutian(int j, int k, int x) const {
  return negate_or_zero(pair_ref(y, static_cast<std::size_t>(x) * pairs(), r, j, k), dim);
}

SparseMatrix ChargeDensitySet::extract_yamagutian(int j, int k, int x) const {
  return extraction(*this, j, k, x).build(dim);
}

ChargeDensitySet charge_densities(const FieldSet& f, const GeneratorSet& gen, const StructureTensor& c) {
  gen.validate();
  require_fields(f);
  if (gen.dim != f.modes_per_site) {
    throw InputError("generator dimension " + std::to_string(gen.dim) + " does not match " +
                     std::to_string(f.modes_per_site) + " modes per site");
  }
  if (c.dim() != gen.r) throw InputError("structure tensor dimension does not match generator count");
  ChargeDensitySet d;
  d.r = gen.r;
  d.modes_per_site = f.modes_per_site;
  d.sites = f.sites;
  d.dim = f.dim;
  d.bracket_factor = f.momentum_factor;
  d.c = c;
  for (int x = 0; x < f.sites; ++x) {
    for (int j = 0; j < gen.r; ++j) {
      d.s.push_back(density(f, gen.S[j], x));
      d.t.push_back(density(f, gen.T[j], x));
    }
  }
  for (int x = 0; x < f.sites; ++x) {
    for (int j = 0; j < gen.r; ++j) {
      for (int k = j + 1; k < gen.r; ++k) d.y.push_back(d.extract_yamagutian(j, k, x));
    }
  }
  return d;
}

bool ETCReport::is_informational(std::string_view eq) const {
  for (const auto& name : informational) {
    if (name == eq) return true;
  }
  return false;
}

bool ETCReport::passed() const {
  for (const auto& e : equations) {
    if (!e.passed && !is_informational(e.property)) return false;
  }
  return true;
}

const CheckReport& ETCReport::equation(std::string_view eq) const {
  for (const auto& e : equations) {
    if (e.property == eq) return e;
  }
  throw std::out_of_range("no ETC entry '" + std::string(eq) + "'");
}

ETCReport etc_verify(const ChargeDensitySet& d, const StructureTensor& c) {
  if (c.dim() != d.r) throw InputError("structure tensor dimension does not match density count");
  const int r = d.r;
  const std::size_t n = d.dim;
  const GaussRational k = d.bracket_factor;
  const YamagutiTensor dt = yamaguti_constants(c);
  const std::size_t P = static_cast<std::size_t>(d.pairs());
  auto Y = [&](int j, int l, int x) { return pair_ref(d.y, x * P, r, j, l); };

  ETCReport report;
  report.conventions = {
      {"canonical", "{p_A(x), u^B(y)} = -i delta_AB delta_xy (graded)"},
      {"momentum-factor", d.bracket_factor.str()},
      {"density-bracket-factor", k.str() + " replaces i in every delta term: [rho(M), rho(N)] = k rho([M,N])"},
      {"delta", "Kronecker delta_xy, unit lattice spacing"},
      {"sites", std::to_string(d.sites)},
      {"on-site", "relations with delta terms are checked at x = y; x != y is the locality entry"},
      {"eq-3", "checked as [t_j, t_k]; the [t_j, s_k] reading is the informational entry 3-as-printed"},
      {"eq-7", "[Y_jk, t_n] = k d^p_jkn t_p"},
      {"schwinger-terms", "none in this lattice realization; no continuum claim is made"},
  };
  report.informational = {"3-as-printed"};

  // Runs check(j, k, x) over every ordered pair on every site.
  auto scan2 = [&](const std::string& eq, auto&& build) {
    for (int x = 0; x < d.sites; ++x) {
      for (int j = 0; j < r; ++j) {
        for (int l = 0; l < r; ++l) {
          if (auto hit = build(j, l, x).residual(n)) {
            return CheckReport::fail(eq, {j, l, x, x}, "fails at j,k=" + idx({j, l}) + " site " + idx({x}) + at(*hit));
          }
        }
      }
    }
    return CheckReport::pass(eq);
  };
  auto cs = [&](Relation& rel, const GaussRational& w, int j, int l, int x) {
    for (int p = 0; p < r; ++p) {
      if (!c(p, j, l).is_zero()) rel.linear(w * c(p, j, l), d.s_at(p, x));
    }
  };
  auto ct = [&](Relation& rel, const GaussRational& w, int j, int l, int x) {
    for (int p = 0; p < r; ++p) {
      if (!c(p, j, l).is_zero()) rel.linear(w * c(p, j, l), d.t_at(p, x));
    }
  };

  report.equations.push_back(scan2("assoc-s", [&](int j, int l, int x) {
    Relation rel;
    rel.bracket(1, d.s_at(j, x), d.s_at(l, x)).bracket(2, d.s_at(j, x), d.t_at(l, x));
    cs(rel, -k, j, l, x);
    return rel;
  }));
  report.equations.push_back(scan2("assoc-t", [&](int j, int l, int x) {
    Relation rel;
    rel.bracket(1, d.t_at(j, x), d.t_at(l, x)).bracket(2, d.s_at(j, x), d.t_at(l, x));
    ct(rel, k, j, l, x);
    return rel;
  }));
  report.equations.push_back(scan2("symmetry", [&](int j, int l, int x) {
    Relation rel;
    rel.bracket(1, d.s_at(j, x), d.t_at(l, x)).bracket(-1, d.t_at(j, x), d.s_at(l, x));
    return rel;
  }));
  report.equations.push_back(scan2("1", [&](int j, int l, int x) {
    Relation rel;
    rel.bracket(1, d.s_at(j, x), d.s_at(l, x));
    add_pair(rel, -k * GaussRational(2), Y(j, l, x));
    cs(rel, -k * kThird, j, l, x);
    ct(rel, -k * Rational(2, 3), j, l, x);
    return rel;
  }));
  report.equations.push_back(scan2("2", [&](int j, int l, int x) {
    Relation rel;
    rel.bracket(1, d.s_at(j, x), d.t_at(l, x));
    add_pair(rel, k, Y(j, l, x));
    cs(rel, -k * kThird, j, l, x);
    ct(rel, k * kThird, j, l, x);
    return rel;
  }));
  auto eq3 = [&](bool printed) {
    return [&, printed](int j, int l, int x) {
      Relation rel;
      rel.bracket(1, d.t_at(j, x), printed ? d.s_at(l, x) : d.t_at(l, x));
      add_pair(rel, -k * GaussRational(2), Y(j, l, x));
      cs(rel, k * Rational(2, 3), j, l, x);
      ct(rel, k * kThird, j, l, x);
      return rel;
    };
  };
  report.equations.push_back(scan2("3", eq3(false)));
  report.equations.push_back(scan2("3-as-printed", eq3(true)));
  report.equations.push_back(scan2("4", [&](int j, int l, int x) {
    // stored Y_jl plus an independent extraction of Y_lj
    Relation rel = extraction(d, l, j, x);
    add_pair(rel, 1, Y(j, l, x));
    return rel;
  }));

  report.equations.push_back([&] {
    for (int x = 0; x < d.sites; ++x) {
      for (int j = 0; j < r; ++j) {
        for (int l = 0; l < r; ++l) {
          for (int m = 0; m < r; ++m) {
            Relation rel;
            for (int p = 0; p < r; ++p) {
              add_pair(rel, c(p, j, l), Y(p, m, x));
              add_pair(rel, c(p, l, m), Y(p, j, x));
              add_pair(rel, c(p, m, j), Y(p, l, x));
            }
            if (auto hit = rel.residual(n)) {
              return CheckReport::fail("5", {j, l, m, x}, "fails at j,k,l=" + idx({j, l, m}) + " site " + idx({x}) + at(*hit));
            }
          }
        }
      }
    }
    return CheckReport::pass("5");
  }());

  auto reductive = [&](const std::string& eq, bool use_t) {
    for (int x = 0; x < d.sites; ++x) {
      for (int j = 0; j < r; ++j) {
        for (int l = j + 1; l < r; ++l) {
          for (int m = 0; m < r; ++m) {
            const SparseMatrix& target = use_t ? d.t_at(m, x) : d.s_at(m, x);
            Relation rel;
            add_pair_bracket(rel, 1, Y(j, l, x), target);
            for (int p = 0; p < r; ++p) {
              if (!dt(p, j, l, m).is_zero()) rel.linear(-k * dt(p, j, l, m), use_t ? d.t_at(p, x) : d.s_at(p, x));
            }
            if (auto hit = rel.residual(n)) {
              return CheckReport::fail(eq, {j, l, m, x}, "fails at j,k,n=" + idx({j, l, m}) + " site " + idx({x}) + at(*hit));
            }
          }
        }
      }
    }
    return CheckReport::pass(eq);
  };
  report.equations.push_back(reductive("6", false));
  report.equations.push_back(reductive("7", true));

  report.equations.push_back([&] {
    for (int x = 0; x < d.sites; ++x) {
      for (int j = 0; j < r; ++j) {
        for (int l = j + 1; l < r; ++l) {
          for (int m = 0; m < r; ++m) {
            for (int q = m + 1; q < r; ++q) {
              Relation rel;
              const PairRef a = Y(j, l, x), b = Y(m, q, x);
              rel.bracket(GaussRational(a.sign * b.sign), *a.m, *b.m);
              for (int p = 0; p < r; ++p) {
                if (!dt(p, j, l, m).is_zero()) add_pair(rel, -k * dt(p, j, l, m), Y(p, q, x));
                if (!dt(p, j, l, q).is_zero()) add_pair(rel, -k * dt(p, j, l, q), Y(m, p, x));
              }
              if (auto hit = rel.residual(n)) {
                return CheckReport::fail("8", {j, l, m, q, x},
                                         "fails at j,k,l,n=" + idx({j, l, m, q}) + " site " + idx({x}) + at(*hit));
              }
            }
          }
        }
      }
    }
    return CheckReport::pass("8");
  }());

  report.equations.push_back([&] {
    // every density family at x against every family at y > x
    auto family = [&](int x) {
      std::vector<std::pair<std::string, const SparseMatrix*>> ops;
      for (int j = 0; j < r; ++j) ops.emplace_back("s" + idx({j}), &d.s_at(j, x));
      for (int j = 0; j < r; ++j) ops.emplace_back("t" + idx({j}), &d.t_at(j, x));
      for (int j = 0; j < r; ++j) {
        for (int l = j + 1; l < r; ++l) ops.emplace_back("Y" + idx({j, l}), Y(j, l, x).m);
      }
      return ops;
    };
    std::size_t count = 0;
    for (int x = 0; x < d.sites; ++x) {
      const auto left = family(x);
      for (int y = x + 1; y < d.sites; ++y) {
        const auto right = family(y);
        for (std::size_t a = 0; a < left.size(); ++a) {
          for (std::size_t b = 0; b < right.size(); ++b) {
            Relation rel;
            rel.bracket(1, *left[a].second, *right[b].second);
            ++count;
            if (auto hit = rel.residual(n)) {
              return CheckReport::fail("locality", {static_cast<int>(a), static_cast<int>(b), x, y},
                                       "[" + left[a].first + "(" + idx({x}) + "), " + right[b].first + "(" + idx({y}) +
                                           ")] != 0" + at(*hit));
            }
          }
        }
      }
    }
    return CheckReport::pass("locality", std::to_string(count) + " cross-site commutators vanish");
  }());

  return report;
}

SparseMatrix ChargeSet::upsilon_at(int j, int k) const { return negate_or_zero(pair_ref(upsilon, 0, r, j, k), dim); }

ChargeSet charges(const ChargeDensitySet& d) {
  ChargeSet q;
  q.r = d.r;
  q.dim = d.dim;
  q.bracket_factor = kMinusI * d.bracket_factor;
  auto integrate = [&](auto&& at_site) {
    Relation rel;
    for (int x = 0; x < d.sites; ++x) rel.linear(kMinusI, at_site(x));
    return rel.build(d.dim);
  };
  for (int j = 0; j < d.r; ++j) {
    q.sigma.push_back(integrate([&](int x) -> const SparseMatrix& { return d.s_at(j, x); }));
    q.tau.push_back(integrate([&](int x) -> const SparseMatrix& { return d.t_at(j, x); }));
  }
  const std::size_t P = static_cast<std::size_t>(d.pairs());
  for (int j = 0; j < d.r; ++j) {
    for (int k = j + 1; k < d.r; ++k) {
      q.upsilon.push_back(integrate([&](int x) -> const SparseMatrix& { return d.y[x * P + d.pair(j, k)]; }));
    }
  }
  return q;
}

CheckReport charge_algebra_check(const ChargeSet& q, const StructureTensor& c) {
  const int r = q.r;
  if (c.dim() != r) throw InputError("structure tensor dimension does not match charge count");
  const std::size_t n = q.dim;
  const GaussRational lam = q.bracket_factor;
  const YamagutiTensor dt = yamaguti_constants(c);
  auto U = [&](int j, int k) { return pair_ref(q.upsilon, 0, r, j, k); };
  auto lin = [&](Relation& rel, const std::vector<SparseMatrix>& family, const GaussRational& w, auto&& coef) {
    for (int p = 0; p < r; ++p) {
      const Rational cf = coef(p);
      if (!cf.is_zero()) rel.linear(w * cf, family[p]);
    }
  };
  auto fail = [&](int family, std::vector<int> where, const std::string& what, const Position& hit) {
    where.insert(where.begin(), family);
    return CheckReport::fail("theorem", std::move(where), what + at(hit));
  };

  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      auto cjk = [&](int p) { return c(p, j, k); };
      Relation ss, tt, st;
      ss.bracket(1, q.sigma[j], q.sigma[k]);
      add_pair(ss, -lam * GaussRational(2), U(j, k));
      lin(ss, q.sigma, -lam * kThird, cjk);
      lin(ss, q.tau, -lam * Rational(2, 3), cjk);
      if (auto hit = ss.residual(n)) return fail(0, {0, j, k}, "commutation: [sigma_j, sigma_k] at j,k=" + idx({j, k}), *hit);
      tt.bracket(1, q.tau[j], q.tau[k]);
      add_pair(tt, -lam * GaussRational(2), U(j, k));
      lin(tt, q.sigma, lam * Rational(2, 3), cjk);
      lin(tt, q.tau, lam * kThird, cjk);
      if (auto hit = tt.residual(n)) return fail(0, {1, j, k}, "commutation: [tau_j, tau_k] at j,k=" + idx({j, k}), *hit);
      st.bracket(1, q.sigma[j], q.tau[k]);
      add_pair(st, lam, U(j, k));
      lin(st, q.sigma, -lam * kThird, cjk);
      lin(st, q.tau, lam * kThird, cjk);
      if (auto hit = st.residual(n)) return fail(1, {j, k}, "mixed: [sigma_j, tau_k] at j,k=" + idx({j, k}), *hit);
    }
  }

  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        Relation rel;
        for (int p = 0; p < r; ++p) {
          add_pair(rel, c(p, j, k), U(p, l));
          add_pair(rel, c(p, k, l), U(p, j));
          add_pair(rel, c(p, l, j), U(p, k));
        }
        if (auto hit = rel.residual(n)) return fail(2, {j, k, l}, "cyclic at j,k,l=" + idx({j, k, l}), *hit);
      }
    }
  }

  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      for (int m = 0; m < r; ++m) {
        auto djkm = [&](int p) { return dt(p, j, k, m); };
        Relation ys, yt;
        add_pair_bracket(ys, 1, U(j, k), q.sigma[m]);
        lin(ys, q.sigma, -lam, djkm);
        if (auto hit = ys.residual(n)) return fail(3, {0, j, k, m}, "reductivity: [Y_jk, sigma_n] at j,k,n=" + idx({j, k, m}), *hit);
        add_pair_bracket(yt, 1, U(j, k), q.tau[m]);
        lin(yt, q.tau, -lam, djkm);
        if (auto hit = yt.residual(n)) return fail(3, {1, j, k, m}, "reductivity: [Y_jk, tau_n] at j,k,n=" + idx({j, k, m}), *hit);
      }
    }
  }

  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        for (int m = l + 1; m < r; ++m) {
          Relation rel;
          rel.bracket(1, *U(j, k).m, *U(l, m).m);
          for (int p = 0; p < r; ++p) {
            if (!dt(p, j, k, l).is_zero()) add_pair(rel, -lam * dt(p, j, k, l), U(p, m));
            if (!dt(p, j, k, m).is_zero()) add_pair(rel, -lam * dt(p, j, k, m), U(l, p));
          }
          if (auto hit = rel.residual(n)) {
            return fail(4, {j, k, l, m}, "yamaguti-lie: [Y_jk, Y_ln] at j,k,l,n=" + idx({j, k, l, m}), *hit);
          }
        }
      }
    }
  }
  return CheckReport::pass("theorem", "charge bracket factor " + lam.str() + "; (sigma, tau, Y)/factor satisfy the table");
}

CheckReport bilinear_lemma_check(const FieldSet& f, const QMatrix& m, const QMatrix& nk) {
  const SparseMatrix qm = bilinear(f, m, 0), qn = bilinear(f, nk, 0), qc = bilinear(f, commutator(m, nk), 0);
  Relation rel;
  rel.bracket(1, qm, qn).linear(-1, qc);
  if (auto hit = rel.residual(f.dim)) return CheckReport::fail("bilinear-lemma", {0}, "[Q(M), Q(N)] != Q([M,N])" + at(*hit));
  return CheckReport::pass("bilinear-lemma");
}

CheckReport bilinear_lemma_check(const FieldSet& f, int trials, std::uint64_t seed) {
  require_fields(f);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  const std::size_t n = static_cast<std::size_t>(f.modes_per_site);
  auto random_matrix = [&] {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    return m;
  };
  for (int trial = 0; trial < trials; ++trial) {
    const QMatrix m = random_matrix(), nk = random_matrix();
    CheckReport one = bilinear_lemma_check(f, m, nk);
    if (!one.passed) {
      return CheckReport::fail("bilinear-lemma", {trial}, "trial " + std::to_string(trial + 1) + ": " + one.detail);
    }
  }
  return CheckReport::pass("bilinear-lemma", std::to_string(trials) + " random pairs, seed " + std::to_string(seed) +
                                                 "; with the generalized Lie-Cartan check this implies the density algebra");
}

}  // namespace mnl
