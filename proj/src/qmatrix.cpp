#include "mnl/qmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "mnl/errors.hpp"

namespace mnl {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QVector EchelonBasis::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw InputError("vector size does not match ambient dimension");
  QVector r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& x = r[pivots_[k]];
    if (x.is_zero()) continue;
    const Rational factor = x / rows_[k][pivots_[k]];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!rows_[k][j].is_zero()) r[j] -= factor * rows_[k][j];
    }
  }
  return r;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
  QVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q.is_zero(); });
}

bool EchelonBasis::insert(std::span<const Rational> v) {
  QVector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return !q.is_zero(); });
  if (it == r.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(it - r.begin()));
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    const Rational inv = Rational(1) / rows[lead][col];
    for (auto& q : rows[lead]) q *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!rows[lead][j].is_zero()) rows[i][j] -= f * rows[lead][j];
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

std::size_t rank(std::vector<QVector> rows, std::size_t cols) { return rref(rows, cols).size(); }

}  // namespace mnl
