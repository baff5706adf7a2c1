#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace mnl {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator. Every operation
/// is checked; results that do not fit throw OverflowError instead of
/// wrapping. Integer operands (den == 1) take a gcd-free fast path, which is
/// what keeps the Fock-space checks tractable.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend constexpr bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Element of Q(i): exact complex rational re + i·im.
class GaussRational {
 public:
  constexpr GaussRational() = default;
  constexpr GaussRational(Rational re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussRational(Rational re, Rational im) : re_(re), im_(im) {}

  static constexpr GaussRational i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] constexpr const Rational& re() const { return re_; }
  [[nodiscard]] constexpr const Rational& im() const { return im_; }
  [[nodiscard]] constexpr bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] GaussRational conj() const { return {re_, -im_}; }
  [[nodiscard]] std::string str() const;

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend constexpr bool operator==(const GaussRational& a, const GaussRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace mnl

template <>
struct std::hash<mnl::Rational> {
  std::size_t operator()(const mnl::Rational& q) const noexcept {
    return std::hash<std::int64_t>{}(q.num()) * 31u ^ std::hash<std::int64_t>{}(q.den());
  }
};
