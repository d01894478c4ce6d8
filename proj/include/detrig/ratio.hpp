#pragma once

#include <optional>

#include "detrig/laurent.hpp"

namespace detrig {

// Exact fraction of Laurent polynomials. Simplification happens only when
// the denominator is a unit (then it is folded into the numerator); all
// other arithmetic stays cross-multiplied, which keeps every operation in
// the ring without needing multivariate gcd.
class LaurentRatio {
public:
  LaurentRatio() : num_(0), den_(LaurentPoly::constant(0, Coeff(1))) {}
  explicit LaurentRatio(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::constant(num_.dims(), Coeff(1))) {}
  LaurentRatio(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::DivisionByZero, "ratio with zero denominator");
    if (num_.dims() != den_.dims()) fail(Errc::ContextMismatch, "ratio context mismatch");
    normalize();
  }

  static LaurentRatio constant(int dims, const Coeff& c) {
    return LaurentRatio(LaurentPoly::constant(dims, c));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int dims() const { return num_.dims(); }

  bool is_zero() const { return num_.is_zero(); }

  // True when the value lies in the coefficient field.
  bool is_constant() const {
    if (num_.is_zero()) return true;
    return constant_value().has_value();
  }
  std::optional<Coeff> constant_value() const {
    if (num_.is_zero()) return Coeff();
    const auto& ln = num_.lead_term();
    const auto& ld = den_.lead_term();
    if (ln.first != ld.first) return std::nullopt;
    Coeff c = ln.second / ld.second;
    if (num_ == den_ * c) return c;
    return std::nullopt;
  }

  // True when the value is a unit of C(t); returns the monomial.
  std::optional<LaurentPoly> unit_value() const {
    if (num_.is_zero()) return std::nullopt;
    auto q = num_.try_divide(den_);
    if (q && q->is_unit()) return q;
    return std::nullopt;
  }

  // Value as a Laurent polynomial when the denominator divides exactly.
  std::optional<LaurentPoly> poly_value() const {
    return num_.try_divide(den_);
  }

  LaurentRatio inverse() const {
    if (num_.is_zero()) fail(Errc::DivisionByZero, "inverting the zero ratio");
    return LaurentRatio(den_, num_);
  }

  LaurentRatio operator-() const { return LaurentRatio(-num_, den_); }

  friend LaurentRatio operator*(const LaurentRatio& a, const LaurentRatio& b) {
    return LaurentRatio(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend LaurentRatio operator/(const LaurentRatio& a, const LaurentRatio& b) {
    if (b.num_.is_zero()) fail(Errc::DivisionByZero, "ratio division by zero");
    return LaurentRatio(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend LaurentRatio operator+(const LaurentRatio& a, const LaurentRatio& b) {
    return LaurentRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentRatio operator-(const LaurentRatio& a, const LaurentRatio& b) {
    return LaurentRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentRatio operator+(const LaurentRatio& a, const Coeff& c) {
    return a + LaurentRatio::constant(a.dims(), c);
  }
  friend LaurentRatio operator-(const LaurentRatio& a, const Coeff& c) {
    return a - LaurentRatio::constant(a.dims(), c);
  }
  friend LaurentRatio operator*(const LaurentRatio& a, const Coeff& c) {
    return LaurentRatio(a.num_ * c, a.den_);
  }

  friend bool operator==(const LaurentRatio& a, const LaurentRatio& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const LaurentRatio& a, const LaurentRatio& b) { return !(a == b); }

  std::string str(const LaurentContext* ctx = nullptr) const {
    if (den_ == LaurentPoly::constant(den_.dims(), Coeff(1))) return num_.str(ctx);
    return "(" + num_.str(ctx) + ") / (" + den_.str(ctx) + ")";
  }

private:
  void normalize() {
    if (den_.is_unit()) {
      num_ = num_.divide_exact(den_);
      den_ = LaurentPoly::constant(num_.dims(), Coeff(1));
    }
  }

  LaurentPoly num_, den_;
};

} // namespace detrig
