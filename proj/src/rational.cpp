#include "mnl/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mnl/errors.hpp"

namespace mnl {
namespace {

using Wide = __int128;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > kMax || v < kMin) throw OverflowError("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(Wide n, Wide d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    if (__builtin_add_overflow(num_, o.num_, &num_)) throw OverflowError("rational arithmetic overflow");
    return *this;
  }
  *this = from_wide(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    if (__builtin_sub_overflow(num_, o.num_, &num_)) throw OverflowError("rational arithmetic overflow");
    return *this;
  }
  *this = from_wide(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    if (__builtin_mul_overflow(num_, o.num_, &num_)) throw OverflowError("rational arithmetic overflow");
    return *this;
  }
  *this = from_wide(Wide(num_) * o.num_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(Wide(num_) * o.den_, Wide(den_) * o.num_);
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r = a;
  if (a.num_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError("rational arithmetic overflow");
  r.num_ = -a.num_;
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm.is_zero()) throw std::domain_error("gaussian rational division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string GaussRational::str() const {
  if (im_.is_zero()) return re_.str();
  const Rational mag = im_ < Rational(0) ? -im_ : im_;
  const std::string unit = mag == Rational(1) ? "i" : mag.str() + "i";
  if (re_.is_zero()) return (im_ < Rational(0) ? "-" : "") + unit;
  return "(" + re_.str() + (im_ < Rational(0) ? " - " : " + ") + unit + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

}  // namespace mnl
