#include "mnl/sparse.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mnl/errors.hpp"

namespace mnl {
namespace {

using Wide = __int128;
using GaussInt = SparseMatrix::GaussInt;

struct WideGauss {
  Wide re = 0;
  Wide im = 0;
};

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("sparse matrix entry overflow");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("sparse matrix denominator overflow");
  return out;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) { return checked_mul(a / std::gcd(a, b), b); }

std::int64_t den_of(const GaussRational& z) { return lcm_checked(z.re().den(), z.im().den()); }

/// z · scale as a Gaussian integer; scale must clear z's denominators.
GaussInt integral(const GaussRational& z, std::int64_t scale) {
  const Rational re = z.re() * Rational(scale), im = z.im() * Rational(scale);
  if (!re.is_integer() || !im.is_integer()) throw std::logic_error("scale does not clear denominators");
  return {re.num(), im.num()};
}

// Row accumulator shared by the combination kernels.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t n) : acc_(n), mark_(n, 0) {}

  void add(std::uint32_t col, Wide re, Wide im) {
    if (!mark_[col]) {
      mark_[col] = 1;
      touched_.push_back(col);
    }
    acc_[col].re += re;
    acc_[col].im += im;
  }

  void add_product(const GaussInt& f, const GaussInt& a, const GaussInt& b, std::uint32_t col) {
    // f·a·b with f, a, b Gaussian integers
    const Wide ar = Wide(f.re) * a.re - Wide(f.im) * a.im;
    const Wide ai = Wide(f.re) * a.im + Wide(f.im) * a.re;
    add(col, ar * b.re - ai * b.im, ar * b.im + ai * b.re);
  }

  /// Calls visit(col, re, im) for every nonzero slot in ascending column
  /// order, then clears. Stops early if visit returns false.
  template <class Visit>
  bool drain(Visit visit) {
    std::sort(touched_.begin(), touched_.end());
    bool go = true;
    for (std::uint32_t col : touched_) {
      auto& slot = acc_[col];
      if (go && (slot.re != 0 || slot.im != 0)) go = visit(col, slot.re, slot.im);
      slot = {};
      mark_[col] = 0;
    }
    touched_.clear();
    return go;
  }

 private:
  std::vector<WideGauss> acc_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint32_t> touched_;
};

struct ScaledTerm {
  GaussInt factor;
  const SparseMatrix* left;
  const SparseMatrix* right;
};

/// Rewrites Σ w·A·B over the common denominator L, so each term becomes an
/// integer factor times integer products.
std::vector<ScaledTerm> scale_terms(std::span<const OperatorTerm> terms, std::size_t n, std::int64_t& common) {
  common = 1;
  for (const auto& t : terms) {
    if (t.left == nullptr || t.left->size() != n || (t.right && t.right->size() != n)) {
      throw InputError("operator size mismatch");
    }
    std::int64_t d = checked_mul(den_of(t.weight), t.left->den());
    if (t.right) d = checked_mul(d, t.right->den());
    common = lcm_checked(common, d);
  }
  std::vector<ScaledTerm> out;
  for (const auto& t : terms) {
    if (t.weight.is_zero()) continue;
    std::int64_t d = t.left->den();
    if (t.right) d = checked_mul(d, t.right->den());
    out.push_back({integral(t.weight * GaussRational(Rational(common / d)), 1), t.left, t.right});
  }
  return out;
}

void accumulate_row(RowAccumulator& acc, const ScaledTerm& t, std::uint32_t i) {
  const auto ap = t.left->row_ptr();
  const auto ac = t.left->cols();
  const auto av = t.left->vals();
  if (t.right == nullptr) {
    static const GaussInt one{1, 0};
    for (std::uint32_t p = ap[i]; p < ap[i + 1]; ++p) acc.add_product(t.factor, av[p], one, ac[p]);
    return;
  }
  const auto bp = t.right->row_ptr();
  const auto bc = t.right->cols();
  const auto bv = t.right->vals();
  for (std::uint32_t p = ap[i]; p < ap[i + 1]; ++p) {
    const std::uint32_t k = ac[p];
    for (std::uint32_t q = bp[k]; q < bp[k + 1]; ++q) acc.add_product(t.factor, av[p], bv[q], bc[q]);
  }
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t n) : n_(n), row_ptr_(n + 1, 0) {
  if (n > std::numeric_limits<std::uint32_t>::max()) throw InputError("sparse matrix too large");
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n);
  m.cols_.resize(n);
  m.vals_.assign(n, GaussInt{1, 0});
  for (std::size_t i = 0; i < n; ++i) {
    m.cols_[i] = static_cast<std::uint32_t>(i);
    m.row_ptr_[i + 1] = static_cast<std::uint32_t>(i + 1);
  }
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t n, std::vector<Triplet> triplets) {
  std::int64_t common = 1;
  for (const auto& t : triplets) {
    if (t.row >= n || t.col >= n) throw InputError("triplet index out of range");
    common = lcm_checked(common, den_of(t.value));
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  SparseMatrix m(n);
  m.den_ = common;
  std::size_t at = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    while (at < triplets.size() && triplets[at].row == i) {
      const std::uint32_t col = triplets[at].col;
      GaussRational sum;
      while (at < triplets.size() && triplets[at].row == i && triplets[at].col == col) sum += triplets[at++].value;
      if (!sum.is_zero()) {
        m.cols_.push_back(col);
        m.vals_.push_back(integral(sum, common));
      }
    }
    m.row_ptr_[i + 1] = static_cast<std::uint32_t>(m.cols_.size());
  }
  m.canonicalize();
  return m;
}

void SparseMatrix::canonicalize() {
  if (cols_.empty()) {
    den_ = 1;
    return;
  }
  std::int64_t g = den_;
  for (const auto& v : vals_) {
    g = std::gcd(g, std::gcd(v.re, v.im));
    if (g == 1) return;
  }
  if (g <= 1) return;
  den_ /= g;
  for (auto& v : vals_) {
    v.re /= g;
    v.im /= g;
  }
}

GaussRational SparseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw InputError("sparse index out of range");
  const auto begin = cols_.begin() + row_ptr_[i], end = cols_.begin() + row_ptr_[i + 1];
  const auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(j));
  if (it == end || *it != j) return {};
  const GaussInt& v = vals_[it - cols_.begin()];
  return {Rational(v.re, den_), Rational(v.im, den_)};
}

std::vector<SparseMatrix::Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      out.push_back({i, cols_[p], {Rational(vals_[p].re, den_), Rational(vals_[p].im, den_)}});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(n_);
  t.den_ = den_;
  std::vector<std::uint32_t> count(n_ + 1, 0);
  for (std::uint32_t c : cols_) ++count[c + 1];
  std::partial_sum(count.begin(), count.end(), t.row_ptr_.begin());
  t.cols_.resize(nnz());
  t.vals_.resize(nnz());
  std::vector<std::uint32_t> fill(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      const std::uint32_t dst = fill[cols_[p]]++;
      t.cols_[dst] = i;
      t.vals_[dst] = vals_[p];
    }
  }
  return t;
}

SparseMatrix SparseMatrix::scaled(const GaussRational& s) const {
  const OperatorTerm term{s, this};
  return combine(std::span(&term, 1), n_);
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  const OperatorTerm terms[] = {{GaussRational(1), &a}, {GaussRational(1), &b}};
  return combine(terms, a.size());
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  const OperatorTerm terms[] = {{GaussRational(1), &a}, {GaussRational(-1), &b}};
  return combine(terms, a.size());
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  const OperatorTerm term{GaussRational(1), &a, &b};
  return combine(std::span(&term, 1), a.size());
}

SparseMatrix combine(std::span<const OperatorTerm> terms, std::size_t n) {
  std::int64_t common = 1;
  const auto scaled = scale_terms(terms, n, common);
  SparseMatrix out(n);
  out.den_ = common;
  RowAccumulator acc(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& t : scaled) accumulate_row(acc, t, i);
    acc.drain([&](std::uint32_t col, Wide re, Wide im) {
      out.cols_.push_back(col);
      out.vals_.push_back({narrow(re), narrow(im)});
      return true;
    });
    out.row_ptr_[i + 1] = static_cast<std::uint32_t>(out.cols_.size());
  }
  out.canonicalize();
  return out;
}

std::optional<Position> first_nonzero(std::span<const OperatorTerm> terms, std::size_t n) {
  std::int64_t common = 1;
  const auto scaled = scale_terms(terms, n, common);
  RowAccumulator acc(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& t : scaled) accumulate_row(acc, t, i);
    std::optional<Position> hit;
    acc.drain([&](std::uint32_t col, Wide, Wide) {
      hit = Position{i, col};
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  const OperatorTerm terms[] = {{GaussRational(1), &a, &b}, {GaussRational(-1), &b, &a}};
  return combine(terms, a.size());
}

SparseMatrix anticommutator(const SparseMatrix& a, const SparseMatrix& b) {
  const OperatorTerm terms[] = {{GaussRational(1), &a, &b}, {GaussRational(1), &b, &a}};
  return combine(terms, a.size());
}

}  // namespace mnl
