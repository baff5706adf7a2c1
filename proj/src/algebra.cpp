#include "mnl/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "mnl/errors.hpp"
#include "mnl/octonion.hpp"

namespace mnl {
namespace {

bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

void require_dim(const StructureTensor& c, std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != c.dim()) {
    throw InputError("tangent vector has length " + std::to_string(v.size()) + ", tensor dimension is " +
                     std::to_string(c.dim()));
  }
}

std::string label(int a) { return "e" + std::to_string(a + 1); }

}  // namespace

StructureTensor::StructureTensor(int dim) : dim_(dim) {
  if (dim <= 0) throw InputError("structure tensor dimension must be positive");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
}

StructureTensor::StructureTensor(int dim, std::vector<Rational> dense) : StructureTensor(dim) {
  if (dense.size() != c_.size()) throw InputError("dense structure tensor has wrong size");
  c_ = std::move(dense);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = j; k < dim; ++k) {
        if ((*this)(i, j, k) != -(*this)(i, k, j)) {
          throw InputError("structure tensor not antisymmetric at c[" + std::to_string(i + 1) + "][" +
                           std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]");
        }
      }
    }
  }
}

StructureTensor StructureTensor::from_entries(int dim, std::span<const Entry> entries) {
  StructureTensor t(dim);
  std::vector<bool> set(t.c_.size(), false);
  auto assign = [&](int i, int j, int k, const Rational& v) {
    const std::size_t at = t.index(i, j, k);
    if (set[at] && t.c_[at] != v) {
      throw InputError("conflicting structure constant at c[" + std::to_string(i + 1) + "][" +
                       std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]");
    }
    set[at] = true;
    t.c_[at] = v;
  };
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim) {
      throw InputError("structure constant index out of range");
    }
    if (e.j == e.k && !e.value.is_zero()) {
      throw InputError("nonzero diagonal structure constant c[" + std::to_string(e.i + 1) + "][" +
                       std::to_string(e.j + 1) + "][" + std::to_string(e.k + 1) + "] violates antisymmetry");
    }
    assign(e.i, e.j, e.k, e.value);
    assign(e.i, e.k, e.j, -e.value);
  }
  return t;
}

StructureTensor StructureTensor::with_entry(int i, int j, int k, const Rational& v) const {
  if (j == k && !v.is_zero()) throw InputError("diagonal entry must stay zero");
  StructureTensor t = *this;
  t.c_[index(i, j, k)] = v;
  t.c_[index(i, k, j)] = -v;
  return t;
}

StructureTensor StructureTensor::scaled(const Rational& s) const {
  StructureTensor t = *this;
  for (auto& q : t.c_) q *= s;
  return t;
}

std::vector<StructureTensor::Entry> StructureTensor::upper_entries() const {
  std::vector<Entry> out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        if (!(*this)(i, j, k).is_zero()) out.push_back({i, j, k, (*this)(i, j, k)});
      }
    }
  }
  return out;
}

TangentVector basis_vector(int dim, int a) {
  if (a < 0 || a >= dim) throw InputError("basis index out of range");
  TangentVector v(dim);
  v[a] = 1;
  return v;
}

TangentVector bracket(const StructureTensor& c, std::span<const Rational> x, std::span<const Rational> y) {
  require_dim(c, x);
  require_dim(c, y);
  const int r = c.dim();
  TangentVector out(r);
  for (int j = 0; j < r; ++j) {
    if (x[j].is_zero()) continue;
    for (int k = 0; k < r; ++k) {
      if (y[k].is_zero()) continue;
      const Rational xy = x[j] * y[k];
      for (int i = 0; i < r; ++i) {
        const Rational& cijk = c(i, j, k);
        if (!cijk.is_zero()) out[i] += cijk * xy;
      }
    }
  }
  return out;
}

TangentVector jacobiator(const StructureTensor& c, std::span<const Rational> x, std::span<const Rational> y,
                         std::span<const Rational> z) {
  TangentVector out = bracket(c, x, bracket(c, y, z));
  const TangentVector b = bracket(c, y, bracket(c, z, x));
  const TangentVector d = bracket(c, z, bracket(c, x, y));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i] + d[i];
  return out;
}

CheckReport is_lie(const StructureTensor& c) {
  const int r = c.dim();
  // J is totally antisymmetric, so strictly increasing triples suffice.
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      for (int d = b + 1; d < r; ++d) {
        if (!all_zero(jacobiator(c, basis_vector(r, a), basis_vector(r, b), basis_vector(r, d)))) {
          return CheckReport::fail("lie", {a, b, d},
                                   "J(" + label(a) + "," + label(b) + "," + label(d) + ") != 0");
        }
      }
    }
  }
  return CheckReport::pass("lie");
}

CheckReport is_maltsev(const StructureTensor& c) {
  const int r = c.dim();
  auto probe = [&](const TangentVector& x, int a, int b) -> std::optional<CheckReport> {
    for (int y = 0; y < r; ++y) {
      const TangentVector ey = basis_vector(r, y);
      for (int z = 0; z < r; ++z) {
        const TangentVector ez = basis_vector(r, z);
        const TangentVector lhs = bracket(c, jacobiator(c, x, ey, ez), x);
        const TangentVector rhs = jacobiator(c, x, ey, bracket(c, x, ez));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "[J(x,y,z),x] != J(x,y,[x,z]) for x=" << label(a);
          if (b >= 0) os << "+" << label(b);
          os << ", y=" << label(y) << ", z=" << label(z);
          return CheckReport::fail("maltsev", {a, b, y, z}, os.str());
        }
      }
    }
    return std::nullopt;
  };
  for (int a = 0; a < r; ++a) {
    if (auto f = probe(basis_vector(r, a), a, -1)) return *f;
  }
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      TangentVector x = basis_vector(r, a);
      x[b] = 1;
      if (auto f = probe(x, a, b)) return *f;
    }
  }
  return CheckReport::pass("maltsev");
}

StructureTensor catalog_algebra(std::string_view name) {
  if (name == "su2") {
    // c^i_jk = ε_ijk
    std::vector<StructureTensor::Entry> e{{2, 0, 1, 1}, {0, 1, 2, 1}, {1, 2, 0, 1}};
    return StructureTensor::from_entries(3, e);
  }
  if (name == "sl2") {
    // basis (h, e, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h
    std::vector<StructureTensor::Entry> e{{1, 0, 1, 2}, {2, 0, 2, -2}, {0, 1, 2, 1}};
    return StructureTensor::from_entries(3, e);
  }
  if (name == "m7") {
    // [e_j, e_k] = e_j e_k − e_k e_j = 2 f_jki e_i
    std::vector<StructureTensor::Entry> e;
    for (int i = 1; i <= 7; ++i) {
      for (int j = 1; j <= 7; ++j) {
        for (int k = j + 1; k <= 7; ++k) {
          const int f = octonion::structure_sign(j, k, i);
          if (f != 0) e.push_back({i - 1, j - 1, k - 1, Rational(2 * f)});
        }
      }
    }
    return StructureTensor::from_entries(7, e);
  }
  constexpr std::string_view kAbelian = "abelian(";
  if (name.starts_with(kAbelian) && name.ends_with(")")) {
    const std::string_view digits = name.substr(kAbelian.size(), name.size() - kAbelian.size() - 1);
    int r = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || r <= 0) {
      throw InputError("bad abelian dimension in '" + std::string(name) + "'");
    }
    return StructureTensor(r);
  }
  throw InputError("unknown algebra '" + std::string(name) + "'");
}

}  // namespace mnl
