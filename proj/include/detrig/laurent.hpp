#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "detrig/rational.hpp"

namespace detrig {

// Exponent vector in Z^d; entries may be negative.
using ExpVec = std::vector<std::int64_t>;

// Shared description of the deformation variables t_1..t_d.
struct LaurentContext {
  int dims = 0;
  std::vector<std::string> vars;  // size dims; default t1..td

  static LaurentContext make(int dims);
  bool operator==(const LaurentContext&) const = default;
};

// Multivariate Laurent polynomial over Q(i), kept in canonical form:
// terms sorted lexicographically by exponent vector, no zero coefficients
// stored, the zero polynomial is the empty map. Values are immutable in
// spirit: every operation returns a fresh polynomial.
class LaurentPoly {
public:
  LaurentPoly() : dims_(0) {}
  explicit LaurentPoly(int dims) : dims_(dims) {}

  static LaurentPoly zero(int dims) { return LaurentPoly(dims); }
  static LaurentPoly constant(int dims, const Coeff& c);
  static LaurentPoly monomial(int dims, const Coeff& c, ExpVec e);
  static LaurentPoly variable(int dims, int index, std::int64_t power = 1);

  int dims() const { return dims_; }
  const std::map<ExpVec, Coeff>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  // A unit of the Laurent ring: exactly one term.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const;
  // Constant value if is_constant(), else nullopt.
  std::optional<Coeff> constant_value() const;

  Coeff coeff(const ExpVec& e) const;
  // Exponent map Psi(p): the support's exponent vectors.
  std::set<ExpVec> exponent_map() const;
  // For a unit, its unique exponent vector (Psi^(1)).
  const ExpVec& unit_exponent() const;
  const Coeff& unit_coeff() const;

  // Lex-leading and lex-trailing terms (max / min exponent vector).
  const std::pair<const ExpVec, Coeff>& lead_term() const;
  const std::pair<const ExpVec, Coeff>& trail_term() const;

  // Degree of the given variable across the support (max exponent);
  // nullopt on the zero polynomial.
  std::optional<std::int64_t> degree_in(int var) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  friend LaurentPoly operator*(const LaurentPoly& a, const Coeff& c);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // Structural order (dims, then term maps); deterministic tie-breaking only.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  // Exact division: returns r with r*q == *this, or throws InexactDivision /
  // DivisionByZero. Division by a unit always succeeds.
  LaurentPoly divide_exact(const LaurentPoly& q) const;
  std::optional<LaurentPoly> try_divide(const LaurentPoly& q) const;

  // Exact evaluation; every coordinate must be nonzero (negative exponents).
  Coeff eval(const std::vector<Coeff>& point) const;

  // Square root in the Laurent ring when recognisable: units with even
  // exponents and square coefficient, plus short polynomials that factor as
  // the square of a binomial in units. Covers every discriminant shape the
  // pipeline produces.
  std::optional<LaurentPoly> sqrt() const;

  // Human-readable rendering, e.g. "2*t1^2*t2^-1 - 1/3".
  std::string str(const LaurentContext* ctx = nullptr) const;

private:
  void insert_term(ExpVec e, Coeff c);  // accumulates, drops zeros
  void check_same_context(const LaurentPoly& o) const;

  int dims_;
  std::map<ExpVec, Coeff> terms_;
};

} // namespace detrig
