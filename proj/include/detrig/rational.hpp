#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "detrig/error.hpp"

namespace detrig {

using Rational = mpq_class;

// Gaussian rational a + b*i. The plain-rational case is b == 0; all field
// operations stay exact. This is the coefficient domain of every polynomial
// in the toolkit: no floating point anywhere.
class Coeff {
public:
  Coeff() : re_(0), im_(0) {}
  Coeff(long v) : re_(v), im_(0) {}            // NOLINT(google-explicit-constructor)
  Coeff(const Rational& re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Coeff i() { return Coeff(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Coeff operator-() const { return Coeff(-re_, -im_); }
  Coeff conj() const { return Coeff(re_, -im_); }

  // |z|^2, a nonnegative rational; doubles as the exact norm used for the
  // ranking comparisons.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  friend Coeff operator+(const Coeff& a, const Coeff& b) {
    return Coeff(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Coeff operator-(const Coeff& a, const Coeff& b) {
    return Coeff(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return Coeff(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Coeff operator/(const Coeff& a, const Coeff& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "coefficient division by zero");
    Rational n = b.norm2();
    Coeff c = a * b.conj();
    return Coeff(c.re_ / n, c.im_ / n);
  }
  Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
  Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
  Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }
  Coeff& operator/=(const Coeff& o) { *this = *this / o; return *this; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }
  // Lexicographic order on (re, im); used only for deterministic tie-breaking.
  friend bool operator<(const Coeff& a, const Coeff& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  Coeff inverse() const { return Coeff(Rational(1)) / *this; }

  Coeff pow(long e) const {
    if (e == 0) return Coeff(Rational(1));
    Coeff base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    Coeff acc(Rational(1));
    while (n > 0) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  // Square root in Q(i) when one exists.
  std::optional<Coeff> sqrt() const;

  // Canonical text form: "p/q" for rationals (denominator omitted when 1),
  // "p/q+r/s i" / "p/q-r/s i" otherwise. Bit-exact round trip with parse().
  std::string str() const;
  static Coeff parse(const std::string& text);

private:
  Rational re_, im_;
};

// sqrt of a nonnegative rational, if rational.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace detrig
